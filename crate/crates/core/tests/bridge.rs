//! The field identity linking `S_q(alpha, a)` to `g_alpha`.

use ppbinom::classify::field_for_q;
use ppbinom::hermite::s_q;
use ppbinom::symalg::{bridge_point, bridge_value, g_poly, BridgeForm, GPolyRecord};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const QS: [u64; 8] = [8, 11, 17, 23, 29, 32, 41, 47];

fn records() -> Vec<GPolyRecord> {
    [2u64, 5, 8, 11, 14].map(|a| g_poly(a).unwrap()).into()
}

#[test]
fn conjugated_form_reproduces_coefficient_sums() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for q in QS {
        let ctx = field_for_q(q).unwrap();
        for rec in records().iter().filter(|r| q >= r.q_bound) {
            for _ in 0..60 {
                let a = ctx.elem(rng.gen_range(1..ctx.order())).unwrap();
                let lhs = s_q(&ctx, a, rec.alpha).unwrap();
                let rhs = bridge_value(&ctx, rec, a, BridgeForm::Conjugated).unwrap();
                assert_eq!(lhs, rhs, "q = {q}, alpha = {}, a = {a}", rec.alpha);
            }
        }
    }
}

#[test]
fn conjugated_form_exhaustive_small_q() {
    for q in [8u64, 11, 17, 32] {
        let ctx = field_for_q(q).unwrap();
        for rec in records().iter().filter(|r| q >= r.q_bound) {
            for a in ctx.nonzero_elements() {
                assert_eq!(
                    s_q(&ctx, a, rec.alpha).unwrap(),
                    bridge_value(&ctx, rec, a, BridgeForm::Conjugated).unwrap()
                );
            }
        }
    }
}

#[test]
fn stated_form_holds_where_the_points_coincide() {
    // Evaluated at y itself the identity holds whenever y = (-1)^c y^q and
    // fails on most other a.
    let rec = g_poly(2).unwrap();
    for q in [11u64, 17, 23] {
        let ctx = field_for_q(q).unwrap();
        let mut differing = 0;
        for a in ctx.nonzero_elements() {
            let same_point = bridge_point(&ctx, a, BridgeForm::Stated)
                == bridge_point(&ctx, a, BridgeForm::Conjugated);
            let lhs = s_q(&ctx, a, 2).unwrap();
            let stated = bridge_value(&ctx, &rec, a, BridgeForm::Stated).unwrap();
            if same_point {
                assert_eq!(lhs, stated);
            } else if lhs != stated {
                differing += 1;
            }
        }
        assert!(differing > 0, "q = {q}");
    }
}

#[test]
fn both_sides_vanish_on_cube_roots() {
    let rec = g_poly(2).unwrap();
    for q in [8u64, 32] {
        let ctx = field_for_q(q).unwrap();
        for a in ctx.nonzero_elements() {
            let y = ctx.pow_u(a, (q + 1) / 3);
            if ctx.is_primitive_cube_root(y) {
                assert!(s_q(&ctx, a, 2).unwrap().is_zero());
                for form in [BridgeForm::Stated, BridgeForm::Conjugated] {
                    assert!(bridge_value(&ctx, &rec, a, form).unwrap().is_zero());
                }
            }
        }
    }
}

#[test]
fn preconditions() {
    let rec = g_poly(2).unwrap();
    let ctx = field_for_q(7).unwrap();
    assert!(bridge_value(&ctx, &rec, ctx.one(), BridgeForm::Conjugated).is_err());
    let ctx = field_for_q(8).unwrap();
    assert!(bridge_value(&ctx, &rec, ctx.zero(), BridgeForm::Stated).is_err());
}
