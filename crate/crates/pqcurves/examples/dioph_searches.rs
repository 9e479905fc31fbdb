//! Run every bounded Diophantine search the classification rests on and
//! print the solution sets.
//!
//! Run with: cargo run --example dioph_searches

use pqcurves::dioph;

fn show(set: &dioph::SolutionSet) {
    println!("{}:", set.equation);
    for t in &set.solutions {
        let vals: Vec<String> = t.iter().map(|v| v.to_string()).collect();
        println!("  ({})", vals.join(", "));
    }
    if set.solutions.is_empty() {
        println!("  no solutions in range");
    }
    for f in &set.families {
        println!(
            "  family {} for {} in {}..={}",
            f.description, f.parameter, f.range.0, f.range.1
        );
    }
    for t in &set.open_family {
        let vals: Vec<String> = t.iter().map(|v| v.to_string()).collect();
        println!("  open-family member ({})", vals.join(", "));
    }
    for (t, why) in &set.rejected {
        let vals: Vec<String> = t.iter().map(|v| v.to_string()).collect();
        println!("  rejected ({}): {}", vals.join(", "), why);
    }
    println!();
}

fn main() {
    show(&dioph::catalan_search(1000).unwrap());
    show(&dioph::lemma22_search(1000, 20).unwrap());
    show(&dioph::lemma23_search(12, 10_000).unwrap());
    show(&dioph::lemma24_search(100, 5).unwrap());
    show(&dioph::cor25_filter(100, 5).unwrap());
    show(&dioph::mordell_search(2000, 10_000).unwrap());
}
