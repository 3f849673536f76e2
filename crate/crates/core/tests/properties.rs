mod common;

use common::*;
use fullrank::lines::{line_full_rank, witness_search, Strategy as Search};
use fullrank::polypencil::{
    classify_line, det_pencil, det_pencil_laplace, maximal_minors, minor_gcd, rational_roots, LineClass, Polynomial,
};
use fullrank::spaces::{AffineSubspace, LinearSubspace, Shape};
use fullrank::{equivalence_apply, Field, Matrix};
use proptest::prelude::*;

fn square_case() -> impl Strategy<Value = (Matrix, Matrix)> {
    (fields(), 1usize..=4).prop_flat_map(|(f, n)| (matrix(f, n, n), matrix(f, n, n)))
}

fn line_case() -> impl Strategy<Value = (Matrix, Matrix)> {
    (fields(), 1usize..=3, 0usize..=2).prop_flat_map(|(f, p, extra)| (matrix(f, p + extra, p), low_rank(f, p + extra, p)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rank_invariant_under_equivalence(
        (m, p, q) in (fields(), 1usize..=4, 1usize..=4)
            .prop_flat_map(|(f, r, c)| (matrix(f, r, c), invertible(f, r), invertible(f, c)))
    ) {
        prop_assert_eq!(equivalence_apply(&p, &m, &q).unwrap().rank(), m.rank());
    }

    #[test]
    fn det_is_multiplicative((a, b) in square_case()) {
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(ab.det().unwrap(), &a.det().unwrap() * &b.det().unwrap());
        prop_assert_eq!(a.det().unwrap().is_zero(), a.rank() < a.nrows());
    }

    #[test]
    fn rref_facts(m in (fields(), 1usize..=4, 1usize..=5).prop_flat_map(|(f, r, c)| matrix(f, r, c))) {
        let r = m.rref();
        prop_assert_eq!(r.matrix.rref(), r.clone());
        prop_assert_eq!(r.pivots.len(), m.rank());
        prop_assert_eq!(m.transpose().rank(), m.rank());
        let k = m.kernel_basis();
        prop_assert_eq!(k.ncols(), m.ncols() - m.rank());
        prop_assert!(m.mul(&k).unwrap().is_zero());
    }

    #[test]
    fn adjugate_identity((a, _) in square_case()) {
        let n = a.nrows();
        let lhs = a.mul(&a.adjugate().unwrap()).unwrap();
        prop_assert_eq!(lhs, Matrix::identity(a.field(), n).scale(&a.det().unwrap()));
    }

    #[test]
    fn pencil_matches_pointwise_det((a, n) in square_case()) {
        let g = det_pencil(&a, &n).unwrap();
        prop_assert_eq!(&g, &det_pencil_laplace(&a, &n).unwrap());
        let f = a.field();
        let points: Vec<_> = match f.elements() {
            Ok(it) => it.collect(),
            Err(_) => (-3..=3).map(|k| f.from_i64(k)).chain([f.from_ratio(1, 2), f.from_ratio(-2, 3)]).collect(),
        };
        for t in points {
            prop_assert_eq!(g.eval(&t), a.add_scaled(&t, &n).unwrap().det().unwrap());
        }
        if let Some(d) = g.degree() {
            prop_assert!(d <= n.rank());
        }
    }

    #[test]
    fn minor_gcd_divides_every_minor((a, n) in line_case()) {
        let g = minor_gcd(&a, &n).unwrap();
        for m in maximal_minors(&a, &n).unwrap() {
            prop_assert!(g.divides(&m) || g.is_zero());
        }
    }

    #[test]
    fn classification_matches_brute_force((a, n) in line_case()) {
        let f = a.field();
        let p = a.ncols();
        let class = classify_line(&a, &n).unwrap().class;
        if f.is_finite() {
            let brute = f.elements().unwrap().all(|t| a.add_scaled(&t, &n).unwrap().rank() == p);
            prop_assert_eq!(class.is_full_rank(), brute);
            prop_assert_eq!(line_full_rank(&a, &n).unwrap().is_full_rank(), brute);
        } else {
            match &class {
                LineClass::HasRoot(t) => prop_assert!(a.add_scaled(t, &n).unwrap().rank() < p),
                LineClass::IdenticallyZero => prop_assert!(a.rank() < p),
                _ => {
                    for k in -5..=5 {
                        prop_assert_eq!(a.add_scaled(&f.from_i64(k), &n).unwrap().rank(), p);
                    }
                }
            }
            let verdict = line_full_rank(&a, &n).unwrap();
            prop_assert_eq!(verdict.is_full_rank(), class.is_full_rank());
            if let Some(cert) = verdict.certificate() {
                prop_assert!(cert.validate());
            }
        }
    }

    #[test]
    fn rational_roots_recovered(roots in proptest::collection::vec((-6i64..=6, 1i64..=4), 0..4), lead in 1i64..=3) {
        let f = Field::Rational;
        let mut g = Polynomial::constant(f.from_i64(lead));
        for &(num, den) in &roots {
            g = g.mul(&Polynomial::from_i64(f, &[-num, den]));
        }
        let found = rational_roots(&g).unwrap();
        for &(num, den) in &roots {
            prop_assert!(found.contains(&f.from_ratio(num, den)));
        }
        for r in &found {
            prop_assert!(g.eval(r).is_zero());
        }
    }

    #[test]
    fn transport_preserves_line_verdict(
        (a, n, p, q) in (finite_fields(), 2usize..=3)
            .prop_flat_map(|(f, s)| (matrix(f, s, s), low_rank(f, s, s), invertible(f, s), invertible(f, s)))
    ) {
        let before = line_full_rank(&a, &n).unwrap().is_full_rank();
        let after = line_full_rank(&equivalence_apply(&p, &a, &q).unwrap(), &equivalence_apply(&p, &n, &q).unwrap()).unwrap().is_full_rank();
        prop_assert_eq!(before, after);
    }

    #[test]
    fn subspace_basis_is_canonical(
        (gens, mix) in (finite_fields(), 1usize..=4).prop_flat_map(|(f, k)| {
            (proptest::collection::vec(matrix(f, 2, 2), k), invertible(f, k))
        })
    ) {
        let f = gens[0].field();
        let shape = Shape::new(f, 2, 2);
        let s = LinearSubspace::from_generators(shape, &gens).unwrap();
        let mixed: Vec<Matrix> = (0..gens.len())
            .map(|i| {
                gens.iter().enumerate().fold(Matrix::zeros(f, 2, 2), |acc, (j, g)| acc.add(&g.scale(&mix.get(i, j))).unwrap())
            })
            .collect();
        prop_assert_eq!(&LinearSubspace::from_generators(shape, &mixed).unwrap(), &s);
        for g in &gens {
            prop_assert!(s.contains(g).unwrap());
        }
        let base = gens[0].add(&Matrix::identity(f, 2)).unwrap();
        let shifted = base.add(gens.last().unwrap()).unwrap();
        prop_assert_eq!(AffineSubspace::new(s.clone(), &base).unwrap(), AffineSubspace::new(s.clone(), &shifted).unwrap());
        let aff = AffineSubspace::new(s, &base).unwrap();
        prop_assert_eq!(AffineSubspace::from_text(&aff.to_text()).unwrap(), aff);
    }

    #[test]
    fn transport_preserves_search_status(
        (gens, p, q, r) in (Just(Field::gf2()), 0usize..=1).prop_flat_map(|(f, r)| {
            (proptest::collection::vec(matrix(f, 3, 2), 3..=5), invertible(f, 3), invertible(f, 2), Just(r))
        })
    ) {
        let f = Field::gf2();
        let s = LinearSubspace::from_generators(Shape::new(f, 3, 2), &gens).unwrap().to_affine();
        let n = fullrank::canonical_n(f, 3, 2, r).unwrap();
        let before = witness_search(&s, &n, Search::Exhaustive, 1 << 12).unwrap().status;
        let moved = s.transform(&p, &q).unwrap();
        let after = witness_search(&moved, &equivalence_apply(&p, &n, &q).unwrap(), Search::Exhaustive, 1 << 12).unwrap().status;
        prop_assert_eq!(before, after);
    }

    #[test]
    fn matrix_text_roundtrip(m in (fields(), 1usize..=4, 1usize..=4).prop_flat_map(|(f, r, c)| matrix(f, r, c))) {
        prop_assert_eq!(Matrix::from_text(&m.to_text()).unwrap(), m);
    }
}

#[test]
fn element_access_agrees_with_iteration() {
    let f = Field::gf3();
    let shape = Shape::new(f, 2, 2);
    let e = fullrank::spaces::enumerate_affine(shape, 2).unwrap();
    for i in (0..e.len()).step_by(13) {
        let s = e.get(i);
        let all: Vec<Matrix> = s.elements(1 << 10).unwrap().collect();
        assert_eq!(all.len() as u64, s.element_count().unwrap());
        for (k, m) in all.iter().enumerate() {
            assert!(s.contains(m).unwrap());
            assert_eq!(&s.element_at(k as u64).unwrap(), m);
        }
        let mut distinct = all.clone();
        distinct.sort_by_key(|m| m.to_text());
        distinct.dedup();
        assert_eq!(distinct.len(), all.len());
    }
}

#[test]
fn rational_line_certificate_roundtrip() {
    let q = Field::Rational;
    let a = Matrix::from_rows(q, &[[2, 1], [0, 3], [1, 1]]);
    let n = fullrank::canonical_n(q, 3, 2, 1).unwrap();
    let cert = line_full_rank(&a, &n).unwrap().certificate().cloned().unwrap();
    let back = fullrank::lines::WitnessCertificate::from_json(&cert.to_json()).unwrap();
    assert_eq!(back, cert);
    assert!(back.validate());
}
