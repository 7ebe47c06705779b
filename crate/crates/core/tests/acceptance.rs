use std::collections::BTreeMap;
use std::io::Write;

use iwahori::rops::{braid_scan, check_table};
use iwahori::selftest::{run_all, Options, ETA_SAMPLES, ETA_SEED};
use iwahori::{Coweight, RootSystem};

// Box radii and sample sizes for the acceptance run.
const RADIUS: i64 = 4;
const BRAID_RADIUS: i64 = 8;
const COMPONENT_RADIUS: i64 = 3;
const EXPLORE_RADIUS: i64 = 6;

const MUST_PASS: [usize; 8] = [1, 2, 4, 5, 6, 7, 8, 9];

// Rows of the B2 table that disagree with the computed operators, with the
// exact points where they do.
const B2_ROW_MISMATCHES: &[(usize, &[(i64, i64)])] = &[
    (6, &[(1, -2)]),
    (
        8,
        &[
            (3, -3),
            (4, -4),
            (5, -5),
            (5, -4),
            (6, -6),
            (6, -5),
            (7, -7),
            (7, -6),
            (7, -5),
            (8, -8),
            (8, -7),
            (8, -6),
        ],
    ),
];

fn say(line: &str) {
    // bypass the test harness capture so the report shows up in plain `cargo test`
    let mut err = std::io::stderr().lock();
    let _ = writeln!(err, "{line}");
}

#[test]
fn options_are_pinned() {
    let o = Options::default();
    assert_eq!(o.radius, RADIUS);
    assert_eq!(o.braid_radius, BRAID_RADIUS);
    assert_eq!(o.component_radius, COMPONENT_RADIUS);
    assert_eq!(o.explore_radius, EXPLORE_RADIUS);
    assert_eq!(ETA_SAMPLES, 1000);
    assert_eq!(ETA_SEED, 0x5eed_2024);
}

#[test]
fn acceptance_criteria() {
    let opts = Options::default();
    let (reports, explore) = run_all(&opts).expect("selftest runs");
    assert_eq!(reports.len(), 10);

    say("");
    say("acceptance");
    for r in &reports {
        say(&r.to_string());
    }
    say("");

    let json = serde_json::json!({ "criteria": reports, "exploratory": explore });
    let out = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("acceptance.json");
    std::fs::write(&out, serde_json::to_string_pretty(&json).unwrap()).unwrap();

    let failed: Vec<usize> = MUST_PASS
        .iter()
        .copied()
        .filter(|&id| !reports[id - 1].passed)
        .collect();
    assert!(failed.is_empty(), "criteria failed: {failed:?}");

    // criterion 3 fails at a fixed, known set of points and nowhere else
    let braid = &reports[2];
    assert_eq!(braid.id, 3);
    assert!(!braid.passed);
    assert_eq!(braid.failure_count, B2_ROW_MISMATCHES.len());
}

#[test]
fn braid_table_disagreements_are_exactly_the_known_ones() {
    for t in ["A2", "B2"] {
        let rs = RootSystem::from_type_str(t).unwrap();
        let got: BTreeMap<usize, Vec<Coweight>> = check_table(&rs, BRAID_RADIUS)
            .unwrap()
            .into_iter()
            .filter(|r| !r.mismatches.is_empty())
            .map(|r| (r.row, r.mismatches))
            .collect();
        let want: BTreeMap<usize, Vec<Coweight>> = if t == "B2" {
            B2_ROW_MISMATCHES
                .iter()
                .map(|(row, pts)| {
                    (
                        *row,
                        pts.iter().map(|&(a, b)| Coweight(vec![a, b])).collect(),
                    )
                })
                .collect()
        } else {
            BTreeMap::new()
        };
        assert_eq!(got, want, "{t}");
        let scan = braid_scan(&rs, BRAID_RADIUS).unwrap();
        assert!(
            scan.unequal_elsewhere.is_empty(),
            "{t}: {:?}",
            scan.unequal_elsewhere
        );
    }
}
