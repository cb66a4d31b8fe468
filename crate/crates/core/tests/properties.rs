use algdiag::burmann::AlgebraicEquation;
use algdiag::exactpoly::{resultant, resultant_subresultant, RatFunc, UniPoly, Var};
use algdiag::holonomic::{AlgebraicElement, QuotientRing};
use algdiag::series::{self, TruncSeries};
use algdiag::{BiPoly, Rational};
use num_traits::Zero;
use proptest::prelude::*;

fn coeffs(max_len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-6i64..=6, 0..=max_len)
}

fn poly(var: Var, max_len: usize) -> impl Strategy<Value = UniPoly> {
    coeffs(max_len).prop_map(move |c| UniPoly::from_ints(var, &c))
}

fn nonzero_poly(var: Var, max_len: usize) -> impl Strategy<Value = UniPoly> {
    poly(var, max_len).prop_filter("nonzero", |p| !p.is_zero())
}

/// Bivariate polynomial in (x, t) with positive degree in x.
fn bipoly_x(max_deg: usize) -> impl Strategy<Value = BiPoly> {
    (
        1..=max_deg,
        prop::collection::vec(prop::collection::vec(-4i64..=4, 3), max_deg + 1),
        1i64..=3,
    )
        .prop_map(|(deg, rows, lead)| {
            let mut terms = vec![(deg, 0, lead)];
            for (i, row) in rows.iter().enumerate().take(deg) {
                for (j, &c) in row.iter().enumerate() {
                    terms.push((i, j, c));
                }
            }
            BiPoly::from_int_terms((Var::X, Var::T), &terms)
        })
}

fn series_with_unit_constant(order: usize) -> impl Strategy<Value = TruncSeries> {
    (
        prop::sample::select(vec![-3i64, -1, 1, 2]),
        prop::collection::vec(-5i64..=5, order),
    )
        .prop_map(move |(c0, rest)| {
            let mut c = vec![c0];
            c.extend(rest);
            TruncSeries::from_ints(&c, order)
        })
}

fn sqrt_ring(c: i64) -> std::sync::Arc<QuotientRing> {
    // A^2 - (1 + c t): irreducible over Q(t) for c != 0
    let p = BiPoly::from_int_terms((Var::T, Var::A), &[(0, 2, 1), (0, 0, -1), (1, 0, -c)]);
    QuotientRing::new(AlgebraicEquation::new(p).unwrap()).unwrap()
}

fn element(
    ring: &std::sync::Arc<QuotientRing>,
    c0: &UniPoly,
    c1: &UniPoly,
    d: &UniPoly,
) -> AlgebraicElement {
    let den = RatFunc::from_poly(d.clone());
    let x0 = RatFunc::from_poly(c0.clone()).checked_div(&den).unwrap();
    let x1 = RatFunc::from_poly(c1.clone()).checked_div(&den).unwrap();
    ring.element(&[x0, x1])
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn unipoly_ring_axioms(a in poly(Var::T, 5), b in poly(Var::T, 5), c in poly(Var::T, 5)) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn derivative_product_rule(a in poly(Var::T, 6), b in poly(Var::T, 6)) {
        prop_assert_eq!((&a * &b).derivative(), &(&a.derivative() * &b) + &(&a * &b.derivative()));
    }

    #[test]
    fn divrem_identity(a in poly(Var::T, 7), b in nonzero_poly(Var::T, 4)) {
        let (q, r) = a.divrem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn gcd_divides_and_collects_common_factor(a in nonzero_poly(Var::T, 4), b in nonzero_poly(Var::T, 4), c in nonzero_poly(Var::T, 3)) {
        let g = (&a * &c).gcd(&(&b * &c)).unwrap();
        prop_assert_eq!(g.leading_coeff(), Rational::from_integer(1.into()));
        prop_assert!((&a * &c).divrem(&g).unwrap().1.is_zero());
        prop_assert!(g.divrem(&c.monic()).unwrap().1.is_zero());
    }

    #[test]
    fn ratfunc_is_normalized(n in poly(Var::T, 4), d in nonzero_poly(Var::T, 4), k in nonzero_poly(Var::T, 2)) {
        let r = RatFunc::new(&n * &k, &d * &k).unwrap();
        prop_assert_eq!(r.den().leading_coeff(), Rational::from_integer(1.into()));
        if !r.is_zero() {
            prop_assert!(r.num().gcd(r.den()).unwrap().is_constant());
        }
        prop_assert_eq!(&r, &RatFunc::new(n, d.clone()).unwrap());
        prop_assert_eq!(RatFunc::new(r.num() * &d, r.den().clone()).unwrap() * RatFunc::from_poly(r.den().clone()),
            RatFunc::from_poly(r.num() * &d));
    }

    #[test]
    fn sylvester_equals_subresultant(f in bipoly_x(3), g in bipoly_x(3)) {
        prop_assert_eq!(resultant(&f, &g, Var::X).unwrap(), resultant_subresultant(&f, &g, Var::X).unwrap());
    }

    #[test]
    fn resultant_is_multiplicative(f1 in bipoly_x(2), f2 in bipoly_x(2), g in bipoly_x(2)) {
        let lhs = resultant(&(&f1 * &f2), &g, Var::X).unwrap().into_unipoly().unwrap();
        let r1 = resultant(&f1, &g, Var::X).unwrap().into_unipoly().unwrap();
        let r2 = resultant(&f2, &g, Var::X).unwrap().into_unipoly().unwrap();
        prop_assert_eq!(lhs, &r1 * &r2);
    }

    #[test]
    fn resultant_swap_sign(f in bipoly_x(3), g in bipoly_x(3)) {
        let m = f.degree_in(Var::X).unwrap().unwrap();
        let n = g.degree_in(Var::X).unwrap().unwrap();
        let fg = resultant(&f, &g, Var::X).unwrap().into_unipoly().unwrap();
        let gf = resultant(&g, &f, Var::X).unwrap().into_unipoly().unwrap();
        prop_assert_eq!(fg, if m * n % 2 == 0 { gf } else { -&gf });
    }

    #[test]
    fn resultant_with_linear_is_evaluation(r in -5i64..=5, g in bipoly_x(3)) {
        // Res_x(x - r, g) = g(r, t)
        let f = BiPoly::from_int_terms((Var::X, Var::T), &[(1, 0, 1), (0, 0, -r)]);
        let res = resultant(&f, &g, Var::X).unwrap().into_unipoly().unwrap();
        let rr = Rational::from_integer(r.into());
        let expected = g.coeffs_in(Var::X).unwrap().iter().rev()
            .fold(UniPoly::zero(Var::T), |acc, c| &acc.scale(&rr) + c);
        prop_assert_eq!(res, expected);
    }

    #[test]
    fn series_inverse(s in series_with_unit_constant(10)) {
        prop_assert_eq!(&s * &s.inverse().unwrap(), TruncSeries::one(10));
    }

    #[test]
    fn series_pow_laws(s in series_with_unit_constant(8), a in 0u64..5, b in 0u64..5) {
        prop_assert_eq!(s.pow_trunc(a + b), &s.pow_trunc(a) * &s.pow_trunc(b));
    }

    #[test]
    fn reversion_routes_agree(n in nonzero_poly(Var::X, 3), d in poly(Var::X, 3)) {
        let d = &UniPoly::one(Var::X) + &(&d * &UniPoly::identity(Var::X));
        prop_assume!(!n.coeff(0).is_zero());
        let f = RatFunc::new(n, d).unwrap();
        let y = series::revert(&f, 9).unwrap();
        prop_assert_eq!(&y, &series::revert_newton(&f, 9).unwrap());
        // y = t f(y)
        prop_assert_eq!(y.clone(), y.compose_ratfunc(&f).unwrap().mul_t().truncate(9));
    }

    #[test]
    fn quotient_ring_laws(c in prop::sample::select(vec![-4i64, -1, 2, 3]),
                          a0 in poly(Var::T, 3), a1 in poly(Var::T, 3), ad in nonzero_poly(Var::T, 2),
                          b0 in poly(Var::T, 3), b1 in poly(Var::T, 3), bd in nonzero_poly(Var::T, 2),
                          c0 in poly(Var::T, 2), c1 in poly(Var::T, 2)) {
        let ring = sqrt_ring(c);
        let x = element(&ring, &a0, &a1, &ad);
        let y = element(&ring, &b0, &b1, &bd);
        let z = element(&ring, &c0, &c1, &UniPoly::one(Var::T));
        prop_assert_eq!(x.mul(&y).unwrap(), y.mul(&x).unwrap());
        prop_assert_eq!(x.mul(&y).unwrap().mul(&z).unwrap(), x.mul(&y.mul(&z).unwrap()).unwrap());
        let lhs = x.mul(&y).unwrap().derivative().unwrap();
        let rhs = x.derivative().unwrap().mul(&y).unwrap().add(&x.mul(&y.derivative().unwrap()).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        if !x.is_zero() {
            prop_assert_eq!(x.inverse().unwrap().inverse().unwrap(), x.clone());
            prop_assert_eq!(x.mul(&x.inverse().unwrap()).unwrap(), ring.one());
        }
    }
}
