//! One line per acceptance criterion. Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use rootlength::vector::qi;
use rootlength::verify::{run_suite, VerifyOptions};

const CRITERIA: [(u32, &str, &str); 10] = [
    (1, "length-oracle", "formula length equals brute force; [-3,3] boxes to rank 3, 500 seeded samples at rank 4"),
    (2, "intro", "B3 alpha1+2alpha3 has length 2 and positive length 3"),
    (3, "theoremB", "proper generators; slab bound 7, stability at 8; E7/E8 certificates"),
    (4, "normality", "every face to rank 4 and the four exceptional facets normal at level 4"),
    (5, "integral-closure", "integrally closed iff m = 1, level 4, rank <= 4"),
    (6, "typeA", "length = positive length = h on [0,3] boxes, A1-A5"),
    (7, "typeC", "length = positive length on [0,3] boxes, C2-C4"),
    (8, "strictness", "alpha - beta has length 2 and positive length 3"),
    (9, "geometry", "facet counts, half-spaces, stabilizers, equal faces, adjacency, rank <= 4"),
    (10, "lattice", "face lattices, subface lattices, minimal elements off Z(F)"),
];

fn main() -> ExitCode {
    let opts = VerifyOptions { max_rank: 4, level_bound: qi(7), samples: 500, seed: 0x5eed_2024 };
    let mut all = true;
    for (n, suite, what) in CRITERIA {
        let t = Instant::now();
        let report = run_suite(suite, &opts).expect("known suite");
        let ok = report.passed();
        all &= ok;
        println!(
            "criterion {n:>2} [{suite}] {}: {what} ({} checks, {:.1}s)",
            if ok { "PASS" } else { "FAIL" },
            report.checks.len(),
            t.elapsed().as_secs_f64()
        );
        for c in report.failures() {
            println!("    {}: {}", c.name, c.detail);
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
