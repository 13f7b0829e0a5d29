//! Randomized round-trip and agreement properties.

use goursat_core::{
    derived_to_rvt, divisibility_points, e_operator, puiseux_from_derived,
    puiseux_from_exponents, puiseux_from_rvt, rvt_to_derived, truncate_last_stage,
    BranchSupport, DerivedVector, Letter, RvtCode,
};
use proptest::prelude::*;

/// Grammar-valid codes: seeded with RR, each extra letter drawn from the
/// letters the grammar allows after the current tail.
fn arb_code(max_extra: usize) -> impl Strategy<Value = RvtCode> {
    proptest::collection::vec(0u8..3, 0..max_extra).prop_map(|choices| {
        let mut letters = vec![Letter::R, Letter::R];
        for c in choices {
            let last = *letters.last().unwrap();
            let next = match c {
                0 => Letter::R,
                1 => Letter::V,
                _ if last == Letter::R => Letter::V,
                _ => Letter::T,
            };
            letters.push(next);
        }
        RvtCode::from_letters(letters).expect("constructed within the grammar")
    })
}

/// Valid derived vectors: positive start, non-negative steps.
fn arb_derived() -> impl Strategy<Value = DerivedVector> {
    (1u64..6, proptest::collection::vec(0u64..4, 0..12)).prop_map(|(first, steps)| {
        let mut entries = vec![first];
        for s in steps {
            let next = entries.last().unwrap() + s;
            entries.push(next);
        }
        DerivedVector::from_flat(&entries).unwrap()
    })
}

proptest! {
    #[test]
    fn growth_vector_round_trip(der in arb_derived()) {
        let sgv = der.to_sgv().unwrap();
        prop_assert_eq!(sgv.to_derived(), der);
    }

    #[test]
    fn flat_and_block_forms_round_trip(der in arb_derived()) {
        let flat = der.flat().unwrap();
        prop_assert_eq!(DerivedVector::from_flat(&flat).unwrap(), der.clone());
        let blocks = der.block_pairs();
        prop_assert_eq!(DerivedVector::from_blocks(&blocks).unwrap(), der);
    }

    #[test]
    fn text_forms_round_trip(der in arb_derived()) {
        prop_assert_eq!(DerivedVector::parse_flat(&der.to_string()).unwrap(), der.clone());
        prop_assert_eq!(DerivedVector::parse_blocks(&der.blocks_string()).unwrap(), der);
    }

    #[test]
    fn every_code_decodes_and_reencodes(code in arb_code(16)) {
        let der = rvt_to_derived(&code).unwrap();
        prop_assert_eq!(derived_to_rvt(&der).unwrap(), code);
    }

    #[test]
    fn parse_render_identity(word in "[RVT]{0,12}") {
        if let Ok(code) = RvtCode::parse(&word) {
            prop_assert_eq!(code.word(), word);
        }
    }

    #[test]
    fn puiseux_routes_agree(
        code in arb_code(16).prop_filter("critical", |c| c.is_critical())
    ) {
        let der = rvt_to_derived(&code).unwrap();
        prop_assert_eq!(
            puiseux_from_derived(&der).unwrap(),
            puiseux_from_rvt(&code).unwrap()
        );
    }

    #[test]
    fn witness_support_round_trip(
        code in arb_code(16).prop_filter("critical", |c| c.is_critical())
    ) {
        let pc = puiseux_from_rvt(&code).unwrap();
        let support = goursat_core::witness_exponents(&pc);
        prop_assert_eq!(puiseux_from_exponents(&support).unwrap(), pc);
    }

    #[test]
    fn support_exponents_divisible_by_the_multiplicity_are_inert(
        code in arb_code(12).prop_filter("critical", |c| c.is_critical()),
        pads in proptest::collection::vec(2u64..50, 0..4)
    ) {
        // A multiple of lambda0 is divisible by every chain member, so it can
        // never be selected as a characteristic exponent.
        let pc = puiseux_from_rvt(&code).unwrap();
        let mut exps = pc.exponents().to_vec();
        for p in pads {
            exps.push(p * pc.lambda0());
        }
        let padded = BranchSupport::new(pc.lambda0(), exps).unwrap();
        prop_assert_eq!(puiseux_from_exponents(&padded).unwrap(), pc);
    }

    #[test]
    fn truncation_scales_like_the_stage_recursion(
        code in arb_code(16).prop_filter("critical", |c| c.is_critical())
    ) {
        let der = rvt_to_derived(&code).unwrap();
        let g = divisibility_points(&der).g();
        if g >= 2 {
            let t = truncate_last_stage(&der).unwrap();
            let beta_code = derived_to_rvt(&t.beta).unwrap();
            prop_assert!(beta_code.is_critical());
            prop_assert_eq!(divisibility_points(&t.beta).g(), g - 1);

            // The full characteristic is the beta characteristic scaled by a,
            // plus one new exponent a(lambda + s - 1) + b - a.
            let pair = e_operator(&t.omega).unwrap();
            let (a, b) = (pair.a(), pair.b());
            let full = puiseux_from_derived(&der).unwrap();
            let beta_pc = puiseux_from_derived(&t.beta).unwrap();
            prop_assert_eq!(full.lambda0(), a * beta_pc.lambda0());
            for j in 0..beta_pc.g() {
                prop_assert_eq!(full.exponents()[j], a * beta_pc.exponents()[j]);
            }
            let prev = beta_pc.exponents()[beta_pc.g() - 1];
            prop_assert_eq!(
                *full.exponents().last().unwrap(),
                a * (prev + t.s - 1) + b - a
            );
        }
    }
}
