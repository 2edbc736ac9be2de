//! Reads the bundled dominant-order table, aggregates languages by verb
//! position, and sets the counts beside a cold stationary distribution to
//! show what the dynamics get right and what they miss.
//!
//! Run with `cargo run --example typology_counts`.

use std::io::BufReader;

use word_order_lab::cost::CostFunction;
use word_order_lab::dynamics::{build_ring, stationary_distribution, transition_matrix, ChainSpec};
use word_order_lab::ordering::{svo_layout, EnergyParams, WordOrder};
use word_order_lab::typology::{parse_language_table, summarize};

fn main() -> word_order_lab::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/dominant_orders.csv");
    let file = std::fs::File::open(path)?;
    let records = parse_language_table(BufReader::new(file))?;
    let summary = summarize(&records);

    println!("{} languages in {}", summary.total, path);
    println!("  verb-initial: {:>4}", summary.n1);
    println!("  verb-medial:  {:>4}", summary.n2);
    println!("  verb-final:   {:>4}", summary.n3);
    println!("  no dominant:  {:>4}", summary.none_count);
    println!();

    let mut counts = std::collections::BTreeMap::new();
    for record in &records {
        *counts.entry(record.dominant_order).or_insert(0usize) += 1;
    }
    let classified = summary.total - summary.none_count;
    println!("share of each order among the {classified} classified languages:");
    for order in WordOrder::ALL {
        let count = counts
            .get(&word_order_lab::ordering::DominantOrder::Order(order))
            .copied()
            .unwrap_or(0);
        println!("  {:>4}  {:>5.3}", order.token(), count as f64 / classified as f64);
    }
    println!();

    let layout = svo_layout(1, 1, 1)?;
    let g = CostFunction::linear(2);
    let params = EnergyParams::new(0.5, 0.5)?;
    let spec = ChainSpec::from_layout(&layout, &g, &params, 6.0)?;
    let pi = stationary_distribution(&transition_matrix(&spec, &build_ring()))?;
    println!("cold stationary distribution (beta = 6) for comparison:");
    for order in WordOrder::ALL {
        println!("  {:>4}  {:>5.3}", order.token(), pi[&order]);
    }
    println!();
    println!("the chain concentrates on the verb-medial pair, echoing the");
    println!("skew toward SVO, while the strong SOV lead in the table comes");
    println!("from pressures outside this model.");
    Ok(())
}
