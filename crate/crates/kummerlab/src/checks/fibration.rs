//! Checks on the elliptic fibration through `pij` and its cover along `Δij`.

use kummerlab_core::fibration::{
    build_fibration_through, build_jacobian_fibration, even_eight_from_fibers,
    transform_double_cover, KodairaType,
};
use kummerlab_core::labels::pairs;
use kummerlab_core::naruki::delta;
use kummerlab_core::Error as CoreError;
use serde_json::json;

use super::{pair_id, Check, Outcome};
use crate::interchange::DivisorClassJson;

const FIBRATION: &str = "elliptic fibration with two I0* and six I2 fibers";

pub(super) fn checks() -> Vec<Check> {
    vec![
        Check::new(
            "fibration.F2zero",
            "the fiber class F = L − E0 − E12 has F^2 = 0",
            FIBRATION,
            |ctx| {
                let fib = build_jacobian_fibration(ctx.model());
                let f2 = fib.fiber_self_intersection()?;
                Ok(Outcome::verdict(f2 == 0, format!("F^2 = {f2}"))
                    .with_data(DivisorClassJson::encode(&fib.space, &fib.fiber_class)?))
            },
        ),
        Check::new(
            "fibration.sections",
            "the four tropes C13, …, C16 meet F once",
            FIBRATION,
            |ctx| {
                let fib = build_jacobian_fibration(ctx.model());
                let degrees = fib.section_degrees()?;
                let names: Vec<&str> = fib.sections.iter().map(|s| s.label.as_str()).collect();
                Ok(Outcome::verdict(
                    degrees == [1; 4] && names == ["C13", "C14", "C15", "C16"],
                    format!("sections {names:?} of degrees {degrees:?}"),
                ))
            },
        ),
        Check::new(
            "fibration.kodaira",
            "F1, F2 are of type I0* and F3, …, F8 of type I2",
            FIBRATION,
            |ctx| {
                let fib = build_jacobian_fibration(ctx.model());
                fib.verify()?;
                let kinds: Vec<String> = fib.fibers.iter().map(|f| f.kodaira_type.to_string()).collect();
                let ok = kinds[..2].iter().all(|k| k == "I0*") && kinds[2..].iter().all(|k| k == "I2") && kinds.len() == 8;
                let fibers: Vec<_> = fib
                    .fibers
                    .iter()
                    .map(|f| {
                        json!({
                            "label": f.label,
                            "type": f.kodaira_type.to_string(),
                            "components": f.components.iter().map(|c| json!([c.label, c.multiplicity])).collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                Ok(Outcome::verdict(ok, kinds.join(" ")).with_data(fibers))
            },
        ),
        Check::new(
            "fibration.eulersum24",
            "Euler numbers of the singular fibers add up to 2·6 + 6·2 = 24",
            FIBRATION,
            |ctx| {
                let fib = build_jacobian_fibration(ctx.model());
                let sum = fib.euler_sum();
                Ok(Outcome::verdict(sum == 24, format!("Σ e(F) = {sum}")))
            },
        ),
        Check::new(
            "fibration.delta12_identity",
            "ΣΔ12 = F1 + F2 − 2(C0 + C12), with Δ12 the simple components of F1 and F2",
            FIBRATION,
            |ctx| {
                let m = ctx.model();
                let fib = build_jacobian_fibration(m);
                Ok(Outcome::verdict(even_eight_from_fibers(&fib, m, delta(1, 2)?), "exact vector identity"))
            },
        ),
        Check::new(
            "fibration.cover12I2",
            "on the double cover branched along Δ12 the fibration has 12 I2 fibers and Euler sum 24",
            FIBRATION,
            |ctx| {
                let m = ctx.model();
                let cover = transform_double_cover(&build_jacobian_fibration(m), m, delta(1, 2)?)?;
                let i2 = cover.count_of(KodairaType::I(2));
                let smooth = cover.count_of(KodairaType::Smooth);
                let sum = cover.euler_sum();
                Ok(Outcome::verdict(
                    i2 == 12 && sum == 24,
                    format!("{i2} I2 fibers, {smooth} smooth fibers from F1 and F2, Euler sum {sum}"),
                ))
            },
        ),
        Check::new(
            "fibration.partial_branch",
            "a branch meeting the I2 fibers partially, such as Δ34, is rejected",
            FIBRATION,
            |ctx| {
                let m = ctx.model();
                let r = transform_double_cover(&build_jacobian_fibration(m), m, delta(3, 4)?);
                let ok = matches!(r, Err(CoreError::PartialBranchIncidence(_)));
                Ok(Outcome::verdict(ok, "Δ34 meets F1 in a strict subset of its simple components"))
            },
        ),
        Check::new(
            "fibration.sweep_ij",
            "the fibration through each pij (fiber class L − E0 − Eij) passes every check",
            FIBRATION,
            |ctx| {
                let m = ctx.model();
                let mut passed = Vec::new();
                let mut failed = Vec::new();
                for (i, j) in pairs() {
                    let ok = (|| -> kummerlab_core::Result<bool> {
                        let fib = build_fibration_through(m, i, j)?;
                        fib.verify()?;
                        let d = delta(i, j)?;
                        let cover = transform_double_cover(&fib, m, d)?;
                        Ok(fib.count_of(KodairaType::I0Star) == 2
                            && fib.count_of(KodairaType::I(2)) == 6
                            && fib.euler_sum() == 24
                            && even_eight_from_fibers(&fib, m, d)
                            && cover.count_of(KodairaType::I(2)) == 12
                            && cover.euler_sum() == 24)
                    })()
                    .unwrap_or(false);
                    if ok { &mut passed } else { &mut failed }.push(pair_id(i, j));
                }
                Ok(Outcome::verdict(failed.is_empty(), format!("{} of 15 pairs pass", passed.len()))
                    .with_data(json!({ "passed": passed, "failed": failed })))
            },
        ),
        Check::new(
            "fibration.weierstrass_sections",
            "sections of the fibration on the double cover",
            FIBRATION,
            |ctx| {
                let m = ctx.model();
                let cover = transform_double_cover(&build_jacobian_fibration(m), m, delta(1, 2)?)?;
                Ok(Outcome::flagged(format!(
                    "{} sections pull back; the Weierstrass form of the covering fibration is not modeled",
                    cover.sections.len()
                )))
            },
        ),
    ]
}
