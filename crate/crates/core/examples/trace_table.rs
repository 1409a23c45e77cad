//! The trace identities for products of order-3 elements of `PSL(2,q)`, and
//! the neighbourhood of `diag(r, r²)` they predict.

use intersection_density::psl2::{verify_neighbourhood_classification, verify_trace_table};

fn main() -> intersection_density::Result<()> {
    for q in [7, 13, 19, 25, 31, 37, 43, 49, 61, 64, 67, 79, 97] {
        let t = verify_trace_table(q)?;
        println!(
            "q = {q:>3}: {} pairs ({}), {} entries, {} mismatches",
            t.pairs_checked,
            if t.full_sweep { "full" } else { "sampled" },
            t.entries_checked,
            t.mismatches.len()
        );
    }
    for q in [7, 13, 16, 19, 25] {
        let n = verify_neighbourhood_classification(q, 1 << 20)?;
        println!("q = {q}: |N(A0)| = {}, predicted {}", n.neighbourhood_size, n.predicted_size);
    }
    Ok(())
}
