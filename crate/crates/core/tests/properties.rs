mod common;

use common::{leibniz_det, permanent_by_enumeration, q};
use grassmann::duality::{annihilator_H, annihilator_H_inv, regressive};
use grassmann::exterior::{
    det_of_map, ext_map, factor_blade, factor_blade_exact, is_blade, project_along, reflect_along, wedge_vectors,
};
use grassmann::field::parse_scalar;
use grassmann::metric::{cross_product, hodge, sp, standard_form, star_dual};
use grassmann::parse::parse_multivector;
use grassmann::projective::{central_project, join, meet, ProjFlat, ProjPoint};
use grassmann::{FieldElement, FieldSpec, Matrix, MultiIndex, Multivector, Vector};
use proptest::prelude::*;

fn coords(d: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-6i64..=6, d)
}

fn vector(d: usize) -> impl Strategy<Value = Vector> {
    coords(d).prop_map(|xs| Vector::from_ints(q(), &xs))
}

fn vectors(d: usize, k: usize) -> impl Strategy<Value = Vec<Vector>> {
    prop::collection::vec(vector(d), k)
}

fn matrix(n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(coords(n), n).prop_map(|rows| {
        let rows: Vec<Vec<FieldElement>> = rows.iter().map(|r| r.iter().map(|&x| q().int(x)).collect()).collect();
        Matrix::from_rows(rows).unwrap()
    })
}

/// A homogeneous element of grade `p` in dimension `d`.
fn homogeneous(d: usize, p: usize) -> impl Strategy<Value = Multivector> {
    let n = MultiIndex::all_of_grade(d, p).len();
    prop::collection::vec(-5i64..=5, n).prop_map(move |cs| {
        let terms = MultiIndex::all_of_grade(d, p).into_iter().zip(cs.into_iter().map(|c| q().int(c)));
        Multivector::from_terms(q(), d, false, terms).unwrap()
    })
}

/// Any element of the algebra in dimension `d`.
fn multivector(d: usize) -> impl Strategy<Value = Multivector> {
    prop::collection::vec(-4i64..=4, 1 << d).prop_map(move |cs| {
        let terms = MultiIndex::all(d).into_iter().zip(cs.into_iter().map(|c| q().int(c)));
        Multivector::from_terms(q(), d, false, terms).unwrap()
    })
}

fn dim_and<T: std::fmt::Debug, S: Strategy<Value = T>>(
    dims: std::ops::RangeInclusive<usize>,
    f: impl Fn(usize) -> S,
) -> impl Strategy<Value = (usize, T)> {
    dims.prop_flat_map(move |d| (Just(d), f(d)))
}

fn sign(odd: bool) -> FieldElement {
    FieldElement::sign(q(), odd)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn vectors_anticommute((_, uv) in dim_and(1..=6, |d| vectors(d, 2))) {
        let a = wedge_vectors(&[uv[0].clone(), uv[1].clone()]).unwrap();
        let b = wedge_vectors(&[uv[1].clone(), uv[0].clone()]).unwrap();
        prop_assert_eq!(a, -&b);
        prop_assert!(wedge_vectors(&[uv[0].clone(), uv[0].clone()]).unwrap().is_zero());
    }

    #[test]
    fn graded_commutativity(
        (_, p, r, s) in (2usize..=5).prop_flat_map(|d| (0..=d, 0..=d).prop_flat_map(move |(p, k)| {
            (Just(d), Just(p), homogeneous(d, p), homogeneous(d, k))
        }))
    ) {
        let k = s.homogeneous_grade().unwrap_or(0);
        prop_assert_eq!(r.wedge(&s).unwrap(), s.wedge(&r).unwrap().scale(&sign(p * k % 2 == 1)));
    }

    #[test]
    fn wedge_is_associative((_, abc) in dim_and(1..=4, |d| prop::collection::vec(multivector(d), 3))) {
        let left = abc[0].wedge(&abc[1]).unwrap().wedge(&abc[2]).unwrap();
        let right = abc[0].wedge(&abc[1].wedge(&abc[2]).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn wedge_distributes((_, abc) in dim_and(1..=4, |d| prop::collection::vec(multivector(d), 3))) {
        let left = abc[0].wedge(&(&abc[1] + &abc[2])).unwrap();
        let right = &abc[0].wedge(&abc[1]).unwrap() + &abc[0].wedge(&abc[2]).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn det_matches_leibniz_and_is_multiplicative((_, ab) in dim_and(1..=5, |n| (matrix(n), matrix(n)))) {
        let (a, b) = ab;
        prop_assert_eq!(a.det().unwrap(), leibniz_det(&a));
        prop_assert_eq!(a.permanent().unwrap(), permanent_by_enumeration(&a));
        let ab = a.checked_mul(&b).unwrap();
        prop_assert_eq!(ab.det().unwrap(), a.det().unwrap() * b.det().unwrap());
        prop_assert_eq!(det_of_map(&a).unwrap(), a.det().unwrap());
    }

    #[test]
    fn exterior_map_is_functorial((d, abm) in dim_and(1..=4, |n| (matrix(n), matrix(n), multivector(n)))) {
        let (a, b, m) = abm;
        let ab = a.checked_mul(&b).unwrap();
        let composed = ext_map(&a, &ext_map(&b, &m).unwrap()).unwrap();
        prop_assert_eq!(ext_map(&ab, &m).unwrap(), composed);
        prop_assert_eq!(ext_map(&Matrix::identity(q(), d), &m).unwrap(), m);
    }

    #[test]
    fn rank_plus_nullity((_, a) in dim_and(1..=5, matrix)) {
        let kernel = a.kernel_basis();
        prop_assert_eq!(a.rank() + kernel.len(), a.cols());
        for k in &kernel {
            prop_assert!(a.mul_vec(k).unwrap().is_zero());
        }
    }

    #[test]
    fn blades_round_trip((_, vs) in (1usize..=6).prop_flat_map(|d| (Just(d), 1..=d.min(4)))
        .prop_flat_map(|(d, k)| (Just(d), vectors(d, k))))
    {
        let m = wedge_vectors(&vs).unwrap();
        if m.is_zero() {
            prop_assert!(is_blade(&m));
        } else {
            prop_assert!(is_blade(&m));
            let f = factor_blade(&m).unwrap();
            prop_assert!(wedge_vectors(&f).unwrap().is_proportional(&m));
            prop_assert_eq!(wedge_vectors(&factor_blade_exact(&m).unwrap()).unwrap(), m);
        }
    }

    #[test]
    fn h_is_invertible((_, m) in dim_and(1..=5, multivector)) {
        let h = annihilator_H(&m).unwrap();
        prop_assert!(h.is_dual());
        prop_assert_eq!(annihilator_H_inv(&h).unwrap(), m);
    }

    #[test]
    fn regressive_is_associative((_, abc) in dim_and(1..=4, |d| prop::collection::vec(multivector(d), 3))) {
        let left = regressive(&regressive(&abc[0], &abc[1]).unwrap(), &abc[2]).unwrap();
        let right = regressive(&abc[0], &regressive(&abc[1], &abc[2]).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn regressive_graded_commutativity(
        (d, p, k, r, s) in (2usize..=5).prop_flat_map(|d| (0..=d, 0..=d).prop_flat_map(move |(p, k)| {
            (Just(d), Just(p), Just(k), homogeneous(d, p), homogeneous(d, k))
        }))
    ) {
        let odd = (d - p) * (d - k) % 2 == 1;
        prop_assert_eq!(regressive(&r, &s).unwrap(), regressive(&s, &r).unwrap().scale(&sign(odd)));
    }

    #[test]
    fn grassmann_dimension_formula_against_kernel(
        (_, uw) in (3usize..=5).prop_flat_map(|d| (Just(d), (1..=d, 1..=d)))
            .prop_flat_map(|(d, (a, b))| (Just(d), (vectors(d, a), vectors(d, b))))
    ) {
        let (u, w) = uw;
        let ok = |vs: &[Vector]| Matrix::from_columns(vs).unwrap().rank() == vs.len();
        prop_assume!(ok(&u) && ok(&w));
        let (fu, fw) = (ProjFlat::from_span(&u).unwrap(), ProjFlat::from_span(&w).unwrap());
        // [U | -W] x = 0 pairs up the intersection coordinates
        let cols: Vec<Vector> = u.iter().cloned().chain(w.iter().map(|x| -x)).collect();
        let cap = Matrix::from_columns(&cols).unwrap().kernel_basis().len();
        let sum = Matrix::from_columns(&cols).unwrap().rank();
        prop_assert_eq!(meet(&fu, &fw).unwrap().grade(), cap);
        prop_assert_eq!(join(&[fu, fw]).unwrap().grade(), sum);
        prop_assert_eq!(sum + cap, u.len() + w.len());
    }

    #[test]
    fn projection_and_reflection((_, wxv) in (2usize..=5).prop_flat_map(|d| (Just(d), 1..d))
        .prop_flat_map(|(d, k)| (Just(d), (vectors(d, k), vectors(d, d - k), vector(d)))))
    {
        let (w, x, v) = wxv;
        let all: Vec<Vector> = w.iter().chain(&x).cloned().collect();
        prop_assume!(!wedge_vectors(&all).unwrap().is_zero());
        let p = project_along(&w, &x, &v).unwrap();
        prop_assert_eq!(project_along(&w, &x, &p).unwrap(), p.clone());
        let r = reflect_along(&w, &x, &v).unwrap();
        prop_assert_eq!(reflect_along(&w, &x, &r).unwrap(), v.clone());
        // v - P(v) lies in <X>
        let rest = &v - &p;
        let mut with_rest = x.clone();
        with_rest.push(rest);
        prop_assert!(wedge_vectors(&with_rest).unwrap().is_zero());
    }

    #[test]
    fn central_projection_matches_meet(p in vector(3), center in vector(3)) {
        let target = ProjFlat::from_span(&[common::v(&[1, 0, 1]), common::v(&[0, 1, 1])]).unwrap();
        prop_assume!(!center.is_zero() && !p.is_zero());
        let c = ProjFlat::from_span(std::slice::from_ref(&center)).unwrap();
        prop_assume!(join(&[c.clone(), target.clone()]).unwrap().grade() == 3);
        prop_assume!(!c.contains(&p).unwrap());
        let image = central_project(&c, &target, &ProjPoint::new(p.clone()).unwrap()).unwrap();
        let through = join(&[c, ProjFlat::from_span(&[p]).unwrap()]).unwrap();
        let expected = ProjPoint::from_flat(&meet(&through, &target).unwrap()).unwrap();
        prop_assert_eq!(image, expected);
    }

    #[test]
    fn cross_product_is_orthogonal(u in vector(3), w in vector(3), signs in prop::collection::vec(prop::bool::ANY, 3)) {
        let signs: Vec<i64> = signs.iter().map(|&b| if b { 1 } else { -1 }).collect();
        let g = standard_form(q(), &signs).unwrap();
        let x = cross_product(&g, &u, &w).unwrap();
        prop_assert!(sp(&g, &x, &u).unwrap().is_zero());
        prop_assert!(sp(&g, &x, &w).unwrap().is_zero());
    }

    #[test]
    fn dual_star_is_conjugate_of_star((d, m) in dim_and(1..=4, multivector), signs in prop::collection::vec(prop::bool::ANY, 4)) {
        let signs: Vec<i64> = signs[..d].iter().map(|&b| if b { 1 } else { -1 }).collect();
        let g = standard_form(q(), &signs).unwrap();
        let ginv = g.inverse().clone();
        let phi = m.clone().with_dual(true);
        // (⋀g⁻¹)⁻¹ ∘ ∗ ∘ ⋀g⁻¹ applied to φ, reading functionals as coordinate vectors
        let lifted = ext_map(&ginv, &m).unwrap();
        let back = ext_map(g.matrix(), &hodge(&g, &lifted).unwrap()).unwrap();
        prop_assert_eq!(star_dual(&g, &phi).unwrap(), back.with_dual(true));
    }

    #[test]
    fn scalar_text_round_trips(n in -10_000i64..10_000, den in 1i64..500, p in prop::sample::select(vec![2u64, 5, 101, 7919])) {
        let x = FieldElement::from_ratio(q(), n, den).unwrap();
        prop_assert_eq!(parse_scalar(&x.to_string(), q()).unwrap(), x);
        let f = FieldSpec::prime(p).unwrap();
        let y = f.int(n);
        prop_assert_eq!(parse_scalar(&y.to_string(), f).unwrap(), y.clone());
        if !y.is_zero() {
            prop_assert!((y.inv().unwrap() * y).is_one());
        }
    }

    #[test]
    fn multivector_text_round_trips((d, m) in dim_and(1..=5, multivector)) {
        prop_assert_eq!(parse_multivector(&m.to_string(), q(), d).unwrap(), m);
    }
}
