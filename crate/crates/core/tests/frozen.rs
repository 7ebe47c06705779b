//! Reference values computed by a separate naive implementation (root strings,
//! reflection closure, affine lengths counted root by root). Frozen here.

use iwahori::psi::psi_infinity;
use iwahori::rops::{dim_orbit, r_closure};
use iwahori::{Coweight, RootSystem};

fn rs(t: &str) -> RootSystem {
    RootSystem::from_type_str(t).unwrap()
}

const ROOT_DATA: &[(&str, usize, u128)] = &[
    ("A1", 1, 2),
    ("A2", 3, 6),
    ("A3", 6, 24),
    ("A4", 10, 120),
    ("B2", 4, 8),
    ("B3", 9, 48),
    ("B4", 16, 384),
    ("C3", 9, 48),
    ("C4", 16, 384),
    ("D4", 12, 192),
    ("D5", 20, 1920),
    ("E6", 36, 51840),
    ("E7", 63, 2903040),
    ("F4", 24, 1152),
    ("G2", 6, 12),
];

#[test]
fn root_counts_and_weyl_orders() {
    for &(t, roots, order) in ROOT_DATA {
        let r = rs(t);
        assert_eq!(r.num_positive_roots(), roots, "{t}");
        assert_eq!(r.cartan_type().weyl_order(), order, "{t}");
    }
}

/// (type, λ, |Ψ(λ)|, dim)
const PSI_SIZES: &[(&str, &[i64], usize, usize)] = &[
    ("A1", &[-4], 4, 3),
    ("A1", &[4], 5, 4),
    ("A1", &[3], 4, 3),
    ("A1", &[-3], 3, 2),
    ("A1", &[0], 1, 0),
    ("A2", &[-6, 3], 27, 10),
    ("A2", &[-3, -3], 24, 9),
    ("A2", &[1, 1], 7, 4),
    ("A2", &[-2, -2], 10, 5),
    ("A2", &[2, -1], 5, 3),
    ("A2", &[3, 3], 37, 12),
    ("A2", &[-4, 2], 12, 6),
    ("A2", &[0, -5], 15, 8),
    ("B2", &[-2, 2], 8, 5),
    ("B2", &[1, -3], 16, 8),
    ("B2", &[3, 3], 76, 21),
    ("B2", &[-4, 1], 12, 7),
    ("B2", &[2, -4], 26, 11),
    ("B2", &[0, -3], 18, 9),
    ("G2", &[-2, 1], 18, 11),
    ("G2", &[1, -2], 4, 3),
    ("G2", &[2, 2], 109, 32),
    ("G2", &[-3, 3], 27, 14),
    ("G2", &[0, -2], 10, 7),
    ("A3", &[-1, 0, -1], 2, 1),
    ("A3", &[1, -2, 1], 5, 3),
    ("A3", &[2, 0, -1], 9, 5),
    ("C3", &[-1, 1, -1], 3, 2),
    ("C3", &[0, -2, 1], 18, 9),
];

#[test]
fn psi_sizes_and_dimensions() {
    for &(t, lambda, size, dim) in PSI_SIZES {
        let r = rs(t);
        let lambda = Coweight(lambda.to_vec());
        let psi = psi_infinity(&r, &lambda).unwrap();
        assert_eq!(psi.len(), size, "{t} {lambda}");
        assert_eq!(r_closure(&r, &lambda).unwrap(), psi.members, "{t} {lambda}");
        assert_eq!(dim_orbit(&r, &lambda).unwrap(), dim, "{t} {lambda}");
    }
}

const SMALL_SETS: &[(&str, &[i64], &[&[i64]])] = &[
    ("A1", &[-4], &[&[-4], &[-2], &[0], &[2]]),
    ("A1", &[4], &[&[-4], &[-2], &[0], &[2], &[4]]),
    ("A1", &[3], &[&[-3], &[-1], &[1], &[3]]),
    ("A1", &[-3], &[&[-3], &[-1], &[1]]),
    (
        "A2",
        &[1, 1],
        &[
            &[-2, 1],
            &[-1, -1],
            &[-1, 2],
            &[0, 0],
            &[1, -2],
            &[1, 1],
            &[2, -1],
        ],
    ),
    (
        "A2",
        &[-2, -2],
        &[
            &[-3, 0],
            &[-2, -2],
            &[-2, 1],
            &[-1, -1],
            &[-1, 2],
            &[0, -3],
            &[0, 0],
            &[1, -2],
            &[1, 1],
            &[2, -1],
        ],
    ),
    (
        "A2",
        &[2, -1],
        &[&[-2, 1], &[-1, -1], &[0, 0], &[1, -2], &[2, -1]],
    ),
    (
        "A2",
        &[-4, 2],
        &[
            &[-4, 2],
            &[-3, 0],
            &[-3, 3],
            &[-2, -2],
            &[-2, 1],
            &[-1, -1],
            &[-1, 2],
            &[0, -3],
            &[0, 0],
            &[1, -2],
            &[1, 1],
            &[2, -1],
        ],
    ),
    (
        "B2",
        &[-2, 2],
        &[
            &[-2, 0],
            &[-2, 1],
            &[-2, 2],
            &[0, -1],
            &[0, 0],
            &[0, 1],
            &[2, -2],
            &[2, -1],
        ],
    ),
    (
        "B2",
        &[-4, 1],
        &[
            &[-4, 1],
            &[-4, 2],
            &[-2, -1],
            &[-2, 0],
            &[-2, 1],
            &[-2, 2],
            &[0, -2],
            &[0, -1],
            &[0, 0],
            &[0, 1],
            &[2, -2],
            &[2, -1],
        ],
    ),
    ("G2", &[1, -2], &[&[-1, 1], &[0, -1], &[0, 0], &[1, -2]]),
    (
        "G2",
        &[0, -2],
        &[
            &[-1, 0],
            &[-1, 1],
            &[-1, 2],
            &[0, -2],
            &[0, -1],
            &[0, 0],
            &[0, 1],
            &[1, -3],
            &[1, -2],
            &[1, -1],
        ],
    ),
    ("A3", &[-1, 0, -1], &[&[-1, 0, -1], &[0, 0, 0]]),
    (
        "A3",
        &[1, -2, 1],
        &[
            &[-1, -1, 1],
            &[-1, 0, -1],
            &[0, 0, 0],
            &[1, -2, 1],
            &[1, -1, -1],
        ],
    ),
    (
        "A3",
        &[2, 0, -1],
        &[
            &[-2, 2, -1],
            &[-1, 0, 0],
            &[-1, 1, -2],
            &[0, -2, 1],
            &[0, -1, -1],
            &[0, 1, -1],
            &[1, -1, 0],
            &[1, 0, -2],
            &[2, 0, -1],
        ],
    ),
    (
        "C3",
        &[-1, 1, -1],
        &[&[-1, 1, -1], &[0, -1, 1], &[0, 0, -1]],
    ),
];

#[test]
fn small_sets_exactly() {
    for &(t, lambda, members) in SMALL_SETS {
        let r = rs(t);
        let psi = psi_infinity(&r, &Coweight(lambda.to_vec())).unwrap();
        let got: Vec<Vec<i64>> = psi.members.iter().map(|m| m.0.clone()).collect();
        let want: Vec<Vec<i64>> = members.iter().map(|m| m.to_vec()).collect();
        assert_eq!(got, want, "{t} {lambda:?}");
    }
}
