//! Library usage: build a cover, extract its symplectic module, and
//! find a verified invariant Lagrangian.
//!
//! ```sh
//! cargo run --release --example find_lagrangian
//! ```

use equilag::cover::{build_cover, cohomology_module, CoverSpec};
use equilag::group::FiniteGroup;
use equilag::rep::catalog_reps;
use equilag::search::{find_invariant_lagrangian, SearchConfig, SearchOutcome};

fn main() {
    // Genus-2 surface, deck group D8, monodromy (x, e, y, e).
    let group = FiniteGroup::dihedral(8).expect("valid order");
    let x = group.generator_by_name("x").unwrap();
    let y = group.generator_by_name("y").unwrap();
    let e = group.identity();
    let spec = CoverSpec::new(2, group.clone(), vec![x, e, y, e]).expect("connected cover");

    let complex = build_cover(spec).expect("valid cover");
    println!(
        "cover: V={} E={} F={} chi={}",
        complex.vertex_count(),
        complex.edge_count(),
        complex.triangle_count(),
        complex.euler_characteristic()
    );

    let module = cohomology_module(&complex).expect("symplectic module");
    println!("module dimension: {}", module.dim());

    let reps = catalog_reps(&group).expect("built-in catalog");
    let outcome = find_invariant_lagrangian(&module, Some(&reps), &SearchConfig::default())
        .expect("search runs");
    match outcome {
        SearchOutcome::Found(cert) => {
            println!(
                "invariant Lagrangian of dimension {} [{}]",
                cert.lagrangian.dim(),
                cert.provenance
            );
            for i in 0..cert.lagrangian.dim() {
                let row: Vec<String> = cert
                    .lagrangian
                    .basis()
                    .row(i)
                    .iter()
                    .map(|r| r.to_string())
                    .collect();
                println!("  [{}]", row.join(", "));
            }
        }
        SearchOutcome::Exhausted(report) => {
            println!(
                "exhausted after {} candidates (height bound {})",
                report.candidates_tried, report.height_bound
            );
        }
    }
}
