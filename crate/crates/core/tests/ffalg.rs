use ffheight::cli::parse_poly;
use ffheight::ffalg::{homogeneous_part, reduce_mod, var_list, FieldElem, MultiPoly, PrimeField, UniPoly};
use ffheight::heightspace::{expand, Ambient, HeightPoint, VarietySpec};
use proptest::prelude::*;

const P: u64 = 7;

fn field() -> PrimeField {
    PrimeField::new(P).unwrap()
}

fn uni(max_len: usize) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(0..P, 0..=max_len).prop_map(|c| UniPoly::from_raw(field(), c))
}

fn nonzero_uni(max_len: usize) -> impl Strategy<Value = UniPoly> {
    uni(max_len).prop_filter("nonzero", |p| !p.is_zero())
}

/// Random polynomial in `x, y` with coefficients in F_p[t].
fn multi(max_terms: usize, max_deg: u32) -> impl Strategy<Value = MultiPoly<UniPoly>> {
    prop::collection::vec(((0..=max_deg, 0..=max_deg), uni(3)), 0..=max_terms).prop_map(|terms| {
        MultiPoly::from_terms(
            field(),
            var_list(&["x", "y"]),
            terms.into_iter().map(|((a, b), c)| (vec![a, b], c)),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn gcd_divides_and_scales(a in nonzero_uni(6), b in nonzero_uni(6), c in nonzero_uni(4)) {
        let g = a.gcd(&b).unwrap();
        prop_assert!(g.is_monic());
        prop_assert!(a.rem(&g).unwrap().is_zero());
        prop_assert!(b.rem(&g).unwrap().is_zero());
        let gc = (&a * &c).gcd(&(&b * &c)).unwrap();
        prop_assert_eq!(gc, (&g * &c).monic());
        let (d, s, t) = a.xgcd(&b).unwrap();
        prop_assert_eq!(&(&(&s * &a) + &(&t * &b)), &d);
    }

    #[test]
    fn valuation_is_additive(a in nonzero_uni(6), b in nonzero_uni(6), lambda in 0..P) {
        let p = UniPoly::linear(field(), lambda);
        let va = a.valuation_at(&p).unwrap();
        let vb = b.valuation_at(&p).unwrap();
        prop_assert_eq!((&a * &b).valuation_at(&p).unwrap(), va + vb);
        // oracle: repeated root test through Taylor coefficients
        let shifted = a.taylor_shift(lambda);
        let direct = shifted.coeffs().iter().position(|&c| c != 0).unwrap() as u32;
        prop_assert_eq!(va, direct);
    }

    #[test]
    fn homogeneous_parts_sum(f in multi(6, 4)) {
        let top = f.total_degree().unwrap_or(0);
        let mut sum = MultiPoly::zero(field(), f.vars().clone());
        for i in 0..=top {
            let h = homogeneous_part(&f, i);
            prop_assert!(h.is_zero() || h.is_homogeneous());
            sum = sum.add(&h);
        }
        prop_assert_eq!(sum, f);
    }

    #[test]
    fn reduction_commutes_with_evaluation(f in multi(6, 3), lambda in 0..P, x in 0..P, y in 0..P) {
        let red = reduce_mod(&f, &UniPoly::linear(field(), lambda)).unwrap();
        let lhs = red.eval(&[FieldElem::new(x, field()), FieldElem::new(y, field())]).value();
        let rhs = f.eval(&[UniPoly::from_raw(field(), vec![x]), UniPoly::from_raw(field(), vec![y])]).eval(lambda);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn expansion_round_trip(gc in prop::collection::vec(uni(2), 0..4), x in uni(2), junk in uni(3), on in any::<bool>(), b in 3usize..5) {
        // y = g(x) whenever that fits below the height bound
        let vars = var_list(&["x", "y"]);
        let g = MultiPoly::from_terms(field(), vars.clone(), gc.into_iter().enumerate().map(|(i, c)| (vec![i as u32, 0], c)));
        let gx = g.eval(&[x.clone(), UniPoly::zero(field())]);
        let y = if on && gx.degree().is_none_or(|d| d < b) { gx.clone() } else { junk.clone() };
        let eq = MultiPoly::var(field(), vars.clone(), 1).sub(&g);
        let spec = VarietySpec::new(field(), Ambient::Affine(2), vars, vec![eq.clone()], vec![]).unwrap();
        let sys = expand(&spec, b).unwrap();
        let pt = HeightPoint::affine(vec![x.clone(), y.clone()]);
        let coeffs = sys.coefficients_of(&pt).unwrap();
        prop_assert_eq!(sys.coords_of(&coeffs), vec![x.clone(), y.clone()]);
        prop_assert_eq!(sys.contains_raw(&coeffs).unwrap(), eq.eval(&[x, y]).is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn parse_round_trip(f in multi(8, 5)) {
        let text = f.to_string();
        let back = parse_poly(&text, field(), f.vars()).unwrap();
        prop_assert_eq!(back, f);
    }
}
