use clap::Parser;

fn main() {
    let cli = pqcurves::cli::Cli::parse();
    std::process::exit(pqcurves::cli::run(cli));
}
