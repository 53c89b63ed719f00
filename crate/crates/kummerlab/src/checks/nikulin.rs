//! The Nikulin lattice and the saturations of the fifteen `Δij`.

use kummerlab_core::labels::pairs;
use kummerlab_core::lattice::int;
use kummerlab_core::naruki::delta;
use kummerlab_core::nikulin::{saturation, NikulinLattice};
use serde_json::json;

use super::{nodes_json, pair_id, Check, Outcome};
use crate::interchange::encode_rational;

const NIKULIN: &str = "the Nikulin lattice of an even eight";

pub(super) fn checks() -> Vec<Check> {
    let mut out = vec![
        Check::new(
            "nikulin.roots16",
            "the norm −2 vectors of the Nikulin lattice are exactly ±c1, …, ±c8",
            NIKULIN,
            |_| {
                let roots = NikulinLattice::new().roots();
                let signed_units = roots.iter().all(|v| {
                    let nonzero: Vec<_> = v.coords().iter().filter(|x| **x != int(0)).collect();
                    nonzero.len() == 1 && (*nonzero[0] == int(1) || *nonzero[0] == int(-1))
                });
                Ok(Outcome::verdict(
                    roots.len() == 16 && signed_units,
                    format!("{} roots, all of the form ±ci", roots.len()),
                ))
            },
        ),
        Check::new(
            "nikulin.no_half_roots",
            "no vector Σ λi ci + d has norm −2",
            NIKULIN,
            |_| {
                let found = NikulinLattice::new().roots_with_parity(1).len();
                Ok(Outcome::verdict(
                    found == 0,
                    format!("{found} roots with odd d-coefficient; such a vector has norm ≤ −4"),
                ))
            },
        ),
        Check::new(
            "nikulin.disc64",
            "the discriminant group has order 2^6",
            NIKULIN,
            |_| {
                let g = NikulinLattice::new().lattice().discriminant_group()?;
                let factors: Vec<String> =
                    g.invariant_factors.iter().map(|f| f.to_string()).collect();
                Ok(Outcome::verdict(
                    g.order() == 64.into(),
                    format!("invariant factors {factors:?}, order {}", g.order()),
                )
                .with_data(json!({ "invariant_factors": factors })))
            },
        ),
        Check::new(
            "nikulin.gram",
            "Gram matrix of {c1, …, c7, d}",
            NIKULIN,
            |_| {
                let gram = NikulinLattice::new().canonical_gram();
                let ok = gram[7][7] == int(-4) && (0..7).all(|k| gram[k][7] == int(-1));
                let data: Vec<Vec<[String; 2]>> = gram
                    .iter()
                    .map(|r| r.iter().map(encode_rational).collect())
                    .collect();
                Ok(Outcome::verdict(ok, "d^2 = −4 and ci.d = −1").with_data(data))
            },
        ),
        Check::new(
            "nikulin.effectivity",
            "norm −2 classes versus classes of smooth rational curves",
            NIKULIN,
            |_| {
                Ok(Outcome::flagged(
                    "the enumeration covers all norm −2 vectors; whether a class is effective is not decided in the lattice model",
                ))
            },
        ),
    ];
    for (i, j) in pairs() {
        out.push(Check::new(
            format!("nikulin.saturation.{}", pair_id(i, j)),
            format!("the saturation of the span of Δ{i}{j} is isometric to the Nikulin lattice"),
            NIKULIN,
            move |ctx| {
                let eight = delta(i, j)?;
                let s = saturation(eight, ctx.model())?;
                let ok = s.matches(&NikulinLattice::new());
                Ok(
                    Outcome::verdict(ok, format!("index {} over the node span", s.index))
                        .with_data(json!({ "nodes": nodes_json(eight), "index": s.index })),
                )
            },
        ));
    }
    out
}
