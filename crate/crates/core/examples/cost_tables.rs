//! Prints memory-cost tables for a range of head positions and cost
//! functions, then shows how multi-word constituents change the picture.
//!
//! Run with `cargo run --example cost_tables`.

use word_order_lab::cost::{memory_cost_constituents, memory_cost_words, optimal_head_positions, CostFunction};
use word_order_lab::ordering::{svo_layout, WordOrder};

fn main() -> word_order_lab::Result<()> {
    let n = 5;
    let functions = [
        CostFunction::linear(n),
        CostFunction::power(2.0, n)?,
        CostFunction::logarithmic(n),
    ];

    println!("memory cost by head position, n = {n} dependents");
    print!("{:>4}", "l");
    for g in &functions {
        print!("{:>14}", g.kind_label());
    }
    println!();
    for l in 1..=n + 1 {
        print!("{l:>4}");
        for g in &functions {
            print!("{:>14.4}", memory_cost_constituents(n, l, g)?);
        }
        println!();
    }
    println!(
        "cheapest positions: {:?} (the center, independent of the cost function)",
        optimal_head_positions(n)?
    );
    println!();

    println!("same table idea at the word level, subject inflated to 3 words");
    let layout = svo_layout(3, 1, 1)?;
    let g = CostFunction::linear(layout.total_words());
    println!("{:>6} {:>10}", "order", "cost");
    for order in WordOrder::ALL {
        let cost = memory_cost_words(&layout, &order.linearization(), &g)?;
        println!("{:>6} {:>10.1}", order.token(), cost);
    }
    println!();
    println!("note how verb-medial orders stay cheapest while the heavy subject");
    println!("penalizes any order that separates the verb from the object.");
    Ok(())
}
