use ffheight::census::{dim_estimate, CensusOptions, VarietyTemplate};
use ffheight::ffalg::{var_list, FieldElem, MultiPoly, PrimeField};
use ffheight::heightspace::{expand, Ambient};
use ffheight::idealdim::*;
use ffheight::Error;
use proptest::prelude::*;

fn f7() -> PrimeField {
    PrimeField::new(7).unwrap()
}

#[test]
fn non_reduced_fiber() {
    let tpl = VarietyTemplate::new(Ambient::Projective(2), &["x", "y", "z"], &["t*x^2 - y*z"]);
    let field = PrimeField::new(5).unwrap();
    for b in 1..=3 {
        let sys = expand(&tpl.instantiate(field).unwrap(), b).unwrap();
        let g = groebner_of_system(&sys, &GroebnerOptions::default()).unwrap();
        assert!(g.verify());
        let top = MultiPoly::<FieldElem>::var(field, sys.vars().clone(), b - 1);
        assert!(ideal_member(&top.pow(2), &g).unwrap().member, "b = {b}");
        let m = ideal_member(&top, &g).unwrap();
        assert!(!m.member, "b = {b}");
        assert_eq!(m.normal_form, sys.vars()[b - 1]);
    }
}

#[test]
fn krull_matches_census_on_curves() {
    let cases: &[(&[&str], &str, usize, usize)] = &[
        (&["x", "y"], "y - x^2", 3, 2),
        (&["x", "y"], "y - x^3", 4, 2),
        (&["x", "y"], "x*y - 1", 3, 1),
        (&["x", "y"], "y - t*x", 3, 2),
    ];
    for &(vars, eq, b, dim) in cases {
        let tpl = VarietyTemplate::new(Ambient::Affine(vars.len()), vars, &[eq]);
        let sys = expand(&tpl.instantiate(f7()).unwrap(), b).unwrap();
        let g = groebner_of_system(&sys, &GroebnerOptions::default()).unwrap();
        assert_eq!(krull_dimension(&g).unwrap(), dim, "{eq} b = {b}");
        let rep = dim_estimate("fixture", &tpl, b, &[5, 7, 11], None, &CensusOptions::default()).unwrap();
        assert_eq!(rep.fit.dim, Some(dim as i64), "{eq} b = {b}");
    }
}

#[test]
fn unit_ideal_and_budget() {
    let tpl = VarietyTemplate::new(Ambient::Affine(2), &["x", "y"], &["y^2 - x^3 - t"]);
    let sys = expand(&tpl.instantiate(f7()).unwrap(), 2).unwrap();
    let g = groebner_of_system(&sys, &GroebnerOptions::default()).unwrap();
    assert!(g.is_unit());
    assert!(matches!(krull_dimension(&g), Err(Error::UnitIdeal)));
    let tight = GroebnerOptions {
        max_vars: 3,
        ..GroebnerOptions::default()
    };
    assert!(matches!(groebner_of_system(&sys, &tight), Err(Error::GroebnerBudget(_))));
}

/// Random sparse polynomial in three variables of degree at most 2.
fn small_poly() -> impl Strategy<Value = MultiPoly<FieldElem>> {
    prop::collection::vec(((0u32..3, 0u32..3, 0u32..3), 1u64..7), 1..4).prop_map(|terms| {
        MultiPoly::from_terms(
            f7(),
            var_list(&["a", "b", "c"]),
            terms
                .into_iter()
                .filter(|((i, j, k), _)| i + j + k <= 2)
                .map(|((i, j, k), c)| (vec![i, j, k], FieldElem::new(c, f7()))),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn bases_are_groebner(gens in prop::collection::vec(small_poly(), 1..4), mult in small_poly()) {
        let vars = var_list(&["a", "b", "c"]);
        let g = groebner(f7(), vars, &gens, &GroebnerOptions::default()).unwrap();
        prop_assert!(g.verify());
        for h in &gens {
            prop_assert!(ideal_member(h, &g).unwrap().member);
            prop_assert!(ideal_member(&h.mul(&mult), &g).unwrap().member);
        }
        // reduced: no leading monomial divides another
        let lms = g.leading_monomials();
        for (i, a) in lms.iter().enumerate() {
            for (j, b) in lms.iter().enumerate() {
                prop_assert!(i == j || !a.iter().zip(b).all(|(x, y)| x <= y));
            }
        }
    }

    #[test]
    fn linear_dimension_is_corank(rows in prop::collection::vec(prop::collection::vec(0u64..7, 4), 0..4)) {
        // oracle: rank by Gaussian elimination
        let f = f7();
        let mut m = rows.clone();
        let mut rank = 0;
        for col in 0..3 {
            if let Some(r) = (rank..m.len()).find(|&r| m[r][col] != 0) {
                m.swap(rank, r);
                let inv = f.inv(m[rank][col]).unwrap();
                for r2 in 0..m.len() {
                    if r2 != rank && m[r2][col] != 0 {
                        let s = f.mul(m[r2][col], inv);
                        for c in 0..4 {
                            m[r2][c] = f.sub(m[r2][c], f.mul(s, m[rank][c]));
                        }
                    }
                }
                rank += 1;
            }
        }
        let inconsistent = m[rank..].iter().any(|r| r[3] != 0);
        let vars = var_list(&["a", "b", "c"]);
        let gens: Vec<MultiPoly<FieldElem>> = rows
            .iter()
            .map(|r| {
                MultiPoly::from_terms(
                    f,
                    vars.clone(),
                    (0..4).filter(|&i| r[i] != 0).map(|i| {
                        let mut e = vec![0u32; 3];
                        if i < 3 {
                            e[i] = 1;
                        }
                        (e, FieldElem::new(r[i], f))
                    }),
                )
            })
            .collect();
        let g = groebner(f, vars, &gens, &GroebnerOptions::default()).unwrap();
        match krull_dimension(&g) {
            Ok(d) => {
                prop_assert!(!inconsistent);
                prop_assert_eq!(d, 3 - rank);
            }
            Err(Error::UnitIdeal) => prop_assert!(inconsistent),
            Err(e) => prop_assert!(false, "{e}"),
        }
    }
}
