use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use crate::algebra::*;
use crate::geometry::tile_numerators;
use crate::gifs::{build_gifs, contact_matrix_of};
use crate::neighbors::*;
use crate::numbersys::*;
use crate::spectral::*;

fn disk_like() -> impl Strategy<Value = TilePoly> {
    (-8i64..=8, -20i64..=20).prop_filter_map("disk-like expanding", |(p, q)| validate_poly(p, q).ok())
}

fn small_disk_like() -> impl Strategy<Value = TilePoly> {
    (-4i64..=4, -8i64..=8).prop_filter_map("disk-like expanding", |(p, q)| validate_poly(p, q).ok())
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-1000i64..1000, 1i64..50).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn direct_sum(word: &[i64], poly: &TilePoly) -> RationalVec {
    let mut acc = RationalVec::zero();
    let mut basis = RationalVec::from_ints(1, 0);
    for &a in word {
        basis = apply_a_inverse(&basis, poly);
        let term = RationalVec {
            gamma: &basis.gamma * BigRational::from_integer(BigInt::from(a)),
            delta: &basis.delta * BigRational::from_integer(BigInt::from(a)),
        };
        acc = &acc + &term;
    }
    acc
}

/// Labels of some cycle through vertex `i`, found by breadth-first search.
fn cycle_through(g: &NeighborGraph, i: usize) -> Option<Vec<i64>> {
    let n = g.len();
    let mut prev: Vec<Option<(usize, i64)>> = vec![None; n];
    let mut queue = std::collections::VecDeque::new();
    for e in g.out_edges(i) {
        if prev[e.to].is_none() {
            prev[e.to] = Some((i, e.label));
            queue.push_back(e.to);
        }
    }
    while let Some(u) = queue.pop_front() {
        if u == i {
            break;
        }
        for e in g.out_edges(u) {
            if prev[e.to].is_none() {
                prev[e.to] = Some((u, e.label));
                queue.push_back(e.to);
            }
        }
    }
    let mut labels = Vec::new();
    let mut at = i;
    loop {
        let (from, label) = prev[at]?;
        labels.push(label);
        at = from;
        if at == i {
            break;
        }
    }
    labels.reverse();
    Some(labels)
}

proptest! {
    #[test]
    fn step_is_shifted_action(poly in disk_like(), g in -50i64..50, d in -50i64..50, b in -19i64..=19) {
        prop_assume!(b.abs() <= poly.max_difference_digit());
        let ell = LatticeVec::new(g, d);
        prop_assert_eq!(neighbor_step(ell, b, &poly).unwrap(), apply_a(ell, &poly) - LatticeVec::new(b, 0));
    }

    #[test]
    fn inverse_round_trip(poly in disk_like(), g in rational(), d in rational()) {
        let x = RationalVec { gamma: g, delta: d };
        prop_assert_eq!(&apply_a_inverse(&apply_a_rational(&x, &poly), &poly), &x);
        prop_assert_eq!(&apply_a_rational(&apply_a_inverse(&x, &poly), &poly), &x);
    }

    #[test]
    fn horner_matches_direct_sum(poly in disk_like(), word in prop::collection::vec(-19i64..=19, 0..=12)) {
        let w = RadixWord(word.clone());
        prop_assert_eq!(eval_radix_finite(&w, &poly), direct_sum(&word, &poly));
        let mut padded = word.clone();
        padded.push(0);
        prop_assert_eq!(eval_radix_finite(&RadixWord(padded), &poly), eval_radix_finite(&w, &poly));
        let mut shifted = vec![0];
        shifted.extend(&word);
        prop_assert_eq!(eval_radix_finite(&RadixWord(shifted), &poly), apply_a_inverse(&eval_radix_finite(&w, &poly), &poly));
    }

    #[test]
    fn truncations_converge(poly in small_disk_like(), period in prop::collection::vec(-1i64..=1, 1..=3)) {
        let pw = PeriodicWord::purely_periodic(period.clone()).unwrap();
        let exact = eval_radix_periodic(&pw, &poly).unwrap().to_f64();
        let err = |k: usize| {
            let (x, y) = eval_radix_finite(&pw.truncate(k * period.len()), &poly).to_f64();
            ((x - exact.0).powi(2) + (y - exact.1).powi(2)).sqrt()
        };
        let (e5, e10, e20) = (err(5), err(10), err(20));
        prop_assert!(e10 <= e5 + 1e-12 || e10 < 1e-9);
        prop_assert!(e20 <= e10 + 1e-12 || e20 < 1e-9);
        prop_assert!(e20 < 1e-2 * (1.0 + e5));
    }

    #[test]
    fn graph_invariants(poly in disk_like()) {
        let g = build_neighbor_graph(&poly).unwrap();
        prop_assert!(g.same_labeled_graph(&appendix_neighbor_graph(&poly)));
        prop_assert_eq!(g.len(), if poly.family().is_square() { 8 } else { 6 });
        for (i, l) in g.vertices().iter().enumerate() {
            prop_assert!(g.contains(&-*l));
            prop_assert!(g.out_edges(i).next().is_some());
        }
        for e in g.edges() {
            prop_assert_eq!(neighbor_step(g.vertices()[e.from], e.label, &poly).unwrap(), g.vertices()[e.to]);
        }
        prop_assert_eq!(origin_on_boundary(&g), !is_number_system(&poly));
    }

    #[test]
    fn cycles_evaluate_to_their_vertex(poly in disk_like()) {
        let g = build_neighbor_graph(&poly).unwrap();
        for i in 0..g.len() {
            if let Some(labels) = cycle_through(&g, i) {
                let pw = PeriodicWord::purely_periodic(labels).unwrap();
                prop_assert_eq!(eval_radix_periodic(&pw, &poly).unwrap(), RationalVec::from(g.vertices()[i]));
            }
        }
    }

    #[test]
    fn gifs_matches_matrix(poly in disk_like()) {
        let g = build_neighbor_graph(&poly).unwrap();
        let gs = build_gifs(&g, &poly).unwrap();
        let m = contact_matrix_of(&gs);
        let qa = poly.digit_count();
        for e in g.edges() {
            prop_assert_eq!(m.get(e.from, e.to), qa - e.label.abs());
        }
        for (i, row) in m.entries().iter().enumerate() {
            let from_edges: i64 = g.out_edges(i).map(|e| qa - e.label.abs()).sum();
            prop_assert_eq!(row.iter().sum::<i64>(), from_edges);
        }
        for map in &gs.maps {
            let d = g.vertices()[map.to] + LatticeVec::new(map.j, 0) - apply_a(g.vertices()[map.from], &poly);
            prop_assert_eq!(d.delta, 0);
            prop_assert!((0..qa).contains(&d.gamma) && (0..qa).contains(&map.j));
        }
    }

    #[test]
    fn spectral_bounds(poly in disk_like()) {
        let r = dimension_report(&poly).unwrap();
        prop_assert!(r.rho >= 1.0 - 1e-12);
        prop_assert!(r.dim_generalized >= 1.0 - 1e-9 && r.dim_generalized <= 2.0 + 1e-9);
        if poly.p() != 0 {
            prop_assert!(r.rho > 1.0 + 1e-9);
        }
        prop_assert!((r.rho - r.rho_power).abs() < 1e-6);
        if poly.similarity() {
            prop_assert!((r.rho - r.cubic_root).abs() < 1e-9);
            prop_assert!((r.dim_generalized - r.dim_similarity.unwrap()).abs() < 1e-9);
        }
        if let Ok(mirror) = validate_poly(-poly.p(), poly.q()) {
            prop_assert_eq!(cubic_largest_root(poly.p(), poly.q()), cubic_largest_root(mirror.p(), mirror.q()));
        }
    }

    #[test]
    fn char_poly_matches_determinant(poly in small_disk_like(), x in -6i64..=6) {
        let g = build_neighbor_graph(&poly).unwrap();
        let m = contact_matrix_of(&build_gifs(&g, &poly).unwrap());
        let n = m.dim();
        // det(xI - M) by exact rational elimination
        let mut a: Vec<Vec<BigRational>> = (0..n)
            .map(|i| (0..n).map(|j| {
                let v = if i == j { x } else { 0 } - m.get(i, j);
                BigRational::from_integer(BigInt::from(v))
            }).collect())
            .collect();
        let mut det = BigRational::from_integer(BigInt::from(1));
        for c in 0..n {
            let Some(piv) = (c..n).find(|&r| a[r][c] != BigRational::from_integer(BigInt::from(0))) else {
                det = BigRational::from_integer(BigInt::from(0));
                break;
            };
            if piv != c {
                a.swap(piv, c);
                det = -det;
            }
            det *= a[c][c].clone();
            for r in c + 1..n {
                let f = &a[r][c] / &a[c][c];
                for k in c..n {
                    let t = &f * &a[c][k];
                    a[r][k] -= t;
                }
            }
        }
        let cp = char_poly(&m).unwrap();
        prop_assert_eq!(BigRational::from_integer(BigInt::from(cp.eval_i128(x as i128).unwrap())), det);
    }

    #[test]
    fn prop22_partial_sums(poly in disk_like(), seed in prop::collection::vec(0usize..16, 1..=10), start in 0usize..8) {
        let g = appendix_neighbor_graph(&poly);
        let mut at = start % g.len();
        let ell = g.vertices()[at];
        let mut labels = Vec::new();
        for s in seed {
            let outs: Vec<_> = g.out_edges(at).collect();
            let e = outs[s % outs.len()];
            labels.push(e.label);
            at = e.to;
        }
        prop_assert!(accepts(&g, ell, &RadixWord(labels.clone())).unwrap());
        let a: Vec<i64> = labels.iter().map(|b| (*b).max(0)).collect();
        let a2: Vec<i64> = labels.iter().map(|b| (-*b).max(0)).collect();
        let x = eval_radix_finite(&RadixWord(a), &poly);
        let x2 = eval_radix_finite(&RadixWord(a2), &poly);
        // x_k - x'_k = l - A^{-k} l_k
        let mut tail = RationalVec::from(g.vertices()[at]);
        for _ in 0..labels.len() {
            tail = apply_a_inverse(&tail, &poly);
        }
        prop_assert_eq!(&x - &x2, &RationalVec::from(ell) - &tail);
    }

    #[test]
    fn represent_round_trips(poly in disk_like(), g in -40i64..=40, d in -40i64..=40) {
        prop_assume!(is_number_system(&poly));
        let ell = LatticeVec::new(g, d);
        let r = represent(ell, &poly).unwrap();
        prop_assert_eq!(r.evaluate(&poly), ell);
        prop_assert!(r.digits.digits().iter().all(|x| (0..poly.q()).contains(x)));
        prop_assert!(r.digits.digits().last().is_none_or(|x| *x != 0));
    }
}

#[test]
fn short_words_are_distinct_points() {
    for (p, q) in [(0, 2), (1, 2), (-1, 3), (2, 3), (2, 2)] {
        let poly = validate_poly(p, q).unwrap();
        let mut seen = std::collections::HashMap::new();
        let total = (q as usize).pow(6);
        for code in 0..total {
            let mut c = code;
            let mut w = Vec::new();
            for _ in 0..6 {
                w.push((c % q as usize) as i64);
                c /= q as usize;
            }
            while w.last() == Some(&0) {
                w.pop();
            }
            let pt = eval_integer_word(&RadixWord(w.clone()), &poly);
            if let Some(prev) = seen.insert(pt, w.clone()) {
                assert_eq!(prev, w, "({p},{q}) two words for {pt}");
            }
        }
    }
}

#[test]
fn tile_clouds_are_nested() {
    for (p, q) in [(2, 3), (-2, 2), (0, -3), (1, -4)] {
        let poly = validate_poly(p, q).unwrap();
        let a = tile_numerators(&poly, 5);
        let b: std::collections::HashSet<_> = tile_numerators(&poly, 6).into_iter().collect();
        let (pp, qq) = (p as i128, q as i128);
        for (g, d) in a {
            assert!(b.contains(&(-qq * d, g - pp * d)));
        }
    }
}

#[test]
fn sign_path_points_lie_on_both_tiles() {
    use crate::geometry::tile_cloud;
    for (p, q) in [(-2, 2), (0, -2), (0, -3), (1, -4), (-1, -5), (-2, 3)] {
        let poly = validate_poly(p, q).unwrap();
        let g = appendix_neighbor_graph(&poly);
        let cloud = tile_cloud(&poly, 10).unwrap();
        let diam = cloud.diameter_bound();
        let tol = 2.0 * (poly.digit_count() as f64).powf(-5.0) * diam.max(1.0) + 0.05;
        for sign in [Sign::NonPositive, Sign::NonNegative] {
            let Some(sp) = find_sign_path(&g, sign) else { continue };
            let x = boundary_point_from_path(&sp, &poly).unwrap().to_f64();
            let near = |pt: (f64, f64)| cloud.points.iter().any(|c| ((c.0 - pt.0).powi(2) + (c.1 - pt.1).powi(2)).sqrt() < tol);
            assert!(near(x), "({p},{q}) {sign:?} x={x:?}");
            let ell = sp.start;
            assert!(near((x.0 - ell.gamma as f64, x.1 - ell.delta as f64)), "({p},{q}) {sign:?} x-l");
            let shifted = crate::neighbors::boundary_point_shifted(&sp, &poly).unwrap();
            assert_eq!(
                &boundary_point_from_path(&sp, &poly).unwrap() - &shifted,
                RationalVec::from(ell)
            );
        }
    }
}
