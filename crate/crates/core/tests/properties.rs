use curvelab::classify::{classify, CurveClass};
use curvelab::families::Parametrization;
use curvelab::implicit::{implicitize, verify_on_curve};
use curvelab::jacobian::{ar_dim, ar_from_hilb, profile, saturation_slice, saturation_slice_direct};
use curvelab::linalg::DegreeBasis;
use curvelab::local::tpq_invariants;
use curvelab::poly::{rat, Monomial};
use curvelab::{BinaryForm, Error, Poly, RankMode, Rat, UniPoly};
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = Rat> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

/// Arbitrary (possibly inhomogeneous) polynomial of degree at most 4.
fn any_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(((0u32..=2, 0u32..=2, 0u32..=2), small_rat()), 0..6)
        .prop_map(|terms| Poly::from_terms(terms.into_iter().map(|((a, b, c), q)| (Monomial::new(a, b, c), q))))
}

fn homogeneous(d: usize, coeffs: Vec<i64>) -> Poly {
    let basis = DegreeBasis::new(d);
    let c: Vec<Rat> = coeffs.into_iter().take(basis.len()).map(|n| rat(n, 1)).collect();
    basis.poly(&c)
}

fn linear_form() -> impl Strategy<Value = Poly> {
    prop::collection::vec(-3i64..=3, 3).prop_map(|c| homogeneous(1, c))
}

/// Random reduced-looking plane curves of degree 2..=5: dense forms, sparse
/// forms, and products of linear and quadratic factors.
fn curve() -> impl Strategy<Value = Poly> {
    let dense = (2usize..=5, prop::collection::vec(-4i64..=4, 21)).prop_map(|(d, c)| homogeneous(d, c));
    let sparse = (2usize..=5, prop::collection::vec((0usize..21, -3i64..=3), 2..5)).prop_map(|(d, picks)| {
        let mut c = vec![0i64; 21];
        for (i, v) in picks {
            c[i % DegreeBasis::new(d).len()] = v;
        }
        homogeneous(d, c)
    });
    let product = prop::collection::vec(linear_form(), 2..=5).prop_map(|ls| ls.iter().fold(Poly::one(), |acc, l| &acc * l));
    let mixed = (linear_form(), prop::collection::vec(-3i64..=3, 6), linear_form())
        .prop_map(|(l, q, m)| &(&l * &homogeneous(2, q)) * &m);
    prop_oneof![dense, sparse, product, mixed].prop_filter("degree at least 2", |f| {
        f.homogeneous_degree().is_some_and(|d| d >= 2)
    })
}

fn binary_form(n: usize) -> impl Strategy<Value = BinaryForm> {
    prop::collection::vec(-3i64..=3, n + 1).prop_map(|c| BinaryForm::new(c.into_iter().map(|v| rat(v, 1)).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(f in any_poly(), g in any_poly(), h in any_poly()) {
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f - &f).is_zero());
        prop_assert_eq!(&f * &Poly::one(), f.clone());
    }

    #[test]
    fn print_then_parse(f in any_poly()) {
        prop_assert_eq!(Poly::parse(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn exact_division_inverts_multiplication(f in any_poly(), g in any_poly()) {
        prop_assume!(!g.is_zero());
        prop_assert_eq!((&f * &g).exact_div(&g).unwrap(), f);
    }

    #[test]
    fn euler_relation(f in curve()) {
        let d = f.homogeneous_degree().unwrap();
        let [fx, fy, fz] = f.gradient();
        let lhs = &(&(&Poly::x() * &fx) + &(&Poly::y() * &fy)) + &(&Poly::z() * &fz);
        prop_assert_eq!(lhs, f.scale(&rat(d as i64, 1)));
        prop_assert!(f.euler_check());
    }

    #[test]
    fn taylor_shift_composes(c in prop::collection::vec(-5i64..=5, 1..6), a in small_rat(), b in small_rat()) {
        let p = UniPoly::from_ints(&c);
        prop_assert_eq!(p.shift(&a).shift(&b), p.shift(&(&a + &b)));
        prop_assert_eq!(p.shift(&a).eval(&Rat::from_integer(0.into())), p.eval(&a));
    }

    #[test]
    fn germ_table_is_consistent(p in 2usize..=12, q in 2usize..=12) {
        prop_assume!(p != q);
        let (p, q) = (p.min(q), p.max(q));
        prop_assert!(tpq_invariants(q, p).is_err());
        let t = tpq_invariants(p, q).unwrap();
        prop_assert_eq!(t.mu, (p - 1) * (q - 1));
        prop_assert!(t.tau_es <= t.mu);
        prop_assert_eq!(t.m_es, t.mu - t.tau_es);
        prop_assert_eq!(t.modality, t.m_es);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Self-duality, the ar identity, support bounds and the Tjurina
    /// formulas, with certified and modular ranks in agreement.
    #[test]
    fn profile_invariants(f in curve(), seed in any::<u64>()) {
        let cert = match profile(&f, RankMode::Certified) {
            Err(Error::NonReducedCurve { .. }) => return Ok(()),
            other => other.unwrap(),
        };
        cert.verify().unwrap();
        let prob = profile(&f, RankMode::Probabilistic { seed }).unwrap();
        prop_assert_eq!((&cert.hilb, &cert.n_table, &cert.ar_table), (&prob.hilb, &prob.n_table, &prob.ar_table));
        let d = cert.d;
        let t = 3 * d - 6;
        for k in 0..=t {
            prop_assert_eq!(cert.n_at(k), cert.n_at(t - k));
        }
        for m in 0..=d {
            prop_assert_eq!(ar_dim(&f, m, RankMode::Certified).unwrap(), cert.ar_at(m));
            prop_assert_eq!(cert.ar_at(m), ar_from_hilb(d, m, cert.hilb_at(m + d - 1)));
        }
        match classify(&cert) {
            Ok(CurveClass::Free { d1, d2 }) => prop_assert_eq!(cert.tau + d1 * d2, (d - 1) * (d - 1)),
            Ok(CurveClass::NearlyFree { .. }) => prop_assert_eq!(cert.sigma, Some(d + cert.mdr - 3)),
            Ok(CurveClass::Neither { nu }) => prop_assert!(nu >= 2),
            Err(Error::MdrZero) => prop_assert_eq!(cert.mdr, 0),
            Err(e) => prop_assert!(false, "{}", e),
        }
    }

    /// The saturation computed by descent matches the direct colon, and
    /// saturating again changes nothing.
    #[test]
    fn saturation_idempotent(f in curve(), k in 0usize..=9) {
        let d = f.homogeneous_degree().unwrap();
        prop_assume!(d <= 4 && k <= 3 * d - 5);
        let descent = match saturation_slice(&f, k, RankMode::Certified) {
            Err(Error::NonReducedCurve { .. }) => return Ok(()),
            other => other.unwrap(),
        };
        let direct = saturation_slice_direct(&f, k, None).unwrap();
        let wider = saturation_slice_direct(&f, k, Some(3 * d)).unwrap();
        prop_assert_eq!(descent.dim, direct.dim);
        prop_assert_eq!(direct.dim, wider.dim);
        for g in descent.basis.as_ref().unwrap() {
            prop_assert_eq!(direct.contains(g), Some(true));
        }
    }

    #[test]
    fn implicitize_round_trip(a in binary_form(3), b in binary_form(3), c in binary_form(3)) {
        let Ok(p) = Parametrization::new(a, b, c) else { return Ok(()) };
        match implicitize(&p, 3) {
            Ok(r) => prop_assert!(verify_on_curve(&r.f, &p)),
            Err(Error::KernelDimHigh { .. } | Error::KernelDimZero(_)) => {}
            Err(e) => prop_assert!(false, "{}", e),
        }
    }
}
