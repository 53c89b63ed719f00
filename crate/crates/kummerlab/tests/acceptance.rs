//! Acceptance criteria 1 to 10. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;

use common::{float_mentions, kummerlab, report_without_elapsed};
use kummerlab_core::code::{BinaryCode, NodeSet};
use kummerlab_core::fibration::{
    build_fibration_through, build_jacobian_fibration, even_eight_from_fibers,
    transform_double_cover, KodairaType,
};
use kummerlab_core::labels::{pairs, NodeLabel, TropeLabel};
use kummerlab_core::lattice::{int, RationalVector};
use kummerlab_core::naruki::{all_deltas, delta};
use kummerlab_core::nikulin::{saturation, NikulinLattice};
use kummerlab_core::polarization::isogeny_polarization_type;
use kummerlab_core::surface::{
    check_x, construct_t, curve_table_t, noether_chi, sixteen_curves_on_x, verify_weak_del_pezzo,
};
use kummerlab_core::NarukiModel;

type Verdict = Result<(), String>;

fn ensure(ok: bool, what: impl Into<String>) -> Verdict {
    if ok {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn core<T>(r: kummerlab_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn even_set_census(m: &NarukiModel, evens: &[NodeSet]) -> Verdict {
    let mut by_weight = BTreeMap::new();
    for s in evens {
        *by_weight.entry(s.weight()).or_insert(0) += 1;
    }
    ensure(
        by_weight == BTreeMap::from([(0, 1), (8, 30), (16, 1)]),
        format!("weights {by_weight:?}"),
    )?;
    let mut e0_free: Vec<NodeSet> = evens
        .iter()
        .copied()
        .filter(|s| s.weight() == 8 && !s.contains(NodeLabel::E0))
        .collect();
    e0_free.sort();
    let mut deltas: Vec<NodeSet> = all_deltas().into_iter().map(|(_, d)| d).collect();
    deltas.sort();
    ensure(
        e0_free == deltas,
        format!("{} E0-free eights differ from the Δij", e0_free.len()),
    )?;
    ensure(m.is_even(NodeSet::FULL), "full set not even")
}

fn code_structure(evens: &[NodeSet]) -> Verdict {
    let code = core(BinaryCode::from_even_sets(evens))?;
    ensure(
        code.dimension() == 5,
        format!("dimension {}", code.dimension()),
    )?;
    ensure(
        code.weight_enumerator() == BTreeMap::from([(0, 1), (8, 30), (16, 1)]),
        "weight enumerator",
    )?;
    let eights: Vec<NodeSet> = evens.iter().copied().filter(|s| s.weight() == 8).collect();
    for (k, a) in eights.iter().enumerate() {
        for b in &eights[k + 1..] {
            let w = a.intersection(*b).weight();
            ensure(w == 0 || w == 4, format!("{a:?} and {b:?} meet in {w}"))?;
        }
    }
    Ok(())
}

fn naruki_model(m: &NarukiModel) -> Verdict {
    for t in TropeLabel::all() {
        ensure(
            core(m.ns().contains(&m.trope_class(t)))?,
            format!("{t} outside the lattice"),
        )?;
    }
    let inc = m.incidence_matrix();
    ensure(
        inc.iter().flatten().all(|&x| x == 0 || x == 1),
        "incidence not 0/1",
    )?;
    ensure(inc.iter().all(|r| r.iter().sum::<i64>() == 6), "row sum")?;
    ensure(
        (0..16).all(|k| inc.iter().map(|r| r[k]).sum::<i64>() == 6),
        "column sum",
    )?;
    ensure(
        core(m.ns().is_isometry(&m.alpha_images()))?,
        "α is not an isometry",
    )?;
    for k in 0..17 {
        let e = RationalVector::unit(17, k);
        ensure(
            core(m.alpha(&core(m.alpha(&e))?))? == e,
            format!("α² moves basis vector {k}"),
        )?;
    }
    Ok(())
}

fn even_eight_identity(m: &NarukiModel) -> Verdict {
    for (i, j) in pairs() {
        ensure(
            core(m.even_eight_identity(i, j))?,
            format!("identity fails for ({i}, {j})"),
        )?;
    }
    Ok(())
}

fn nikulin(m: &NarukiModel) -> Verdict {
    let n = NikulinLattice::new();
    let roots = n.roots();
    let mut expected: Vec<RationalVector> = (0..8)
        .flat_map(|k| [RationalVector::unit(8, k), -RationalVector::unit(8, k)])
        .collect();
    expected.sort();
    ensure(roots == expected, format!("{} roots", roots.len()))?;
    ensure(
        n.roots_with_parity(1).is_empty(),
        "roots with odd d-coefficient",
    )?;
    ensure(n.discriminant_order() == 64.into(), "discriminant order")?;
    for (i, j) in pairs() {
        let s = core(saturation(core(delta(i, j))?, m))?;
        ensure(s.matches(&n), format!("saturation of Δ{i}{j}"))?;
    }
    Ok(())
}

fn containment_queries(m: &NarukiModel) -> Verdict {
    let d = m.discriminant_elements();
    ensure(d.first.in_dual && !d.first.in_lattice, "first half-sum")?;
    ensure(d.second.in_dual && !d.second.in_lattice, "second half-sum")?;
    ensure(d.independent(), "half-sums not independent")?;
    let quad =
        NodeSet::from_nodes([(1, 3), (1, 4), (2, 3), (2, 4)].map(|(i, j)| NodeLabel::E(i, j)));
    let hits = m.even_eights_containing(quad);
    let mut expected = vec![core(delta(1, 2))?, core(delta(3, 4))?];
    expected.sort();
    let extra: Vec<&NodeSet> = hits.iter().filter(|h| !expected.contains(h)).collect();
    ensure(
        hits == expected,
        format!("even eights containing {{E13, E14, E23, E24}} are Δ12, Δ34 and {extra:?}"),
    )
}

fn fibration(m: &NarukiModel) -> Verdict {
    let fib = build_jacobian_fibration(m);
    core(fib.verify())?;
    ensure(core(fib.fiber_self_intersection())? == 0, "F^2")?;
    ensure(core(fib.section_degrees())? == [1; 4], "section degrees")?;
    let kinds: Vec<KodairaType> = fib.fibers.iter().map(|f| f.kodaira_type).collect();
    ensure(
        kinds[..2] == [KodairaType::I0Star; 2] && kinds[2..] == [KodairaType::I(2); 6],
        format!("{kinds:?}"),
    )?;
    ensure(fib.euler_sum() == 24, "Euler sum")?;
    let d12 = core(delta(1, 2))?;
    ensure(
        even_eight_from_fibers(&fib, m, d12),
        "Δ12 = F1 + F2 − 2(C0 + C12)",
    )?;
    let cover = core(transform_double_cover(&fib, m, d12))?;
    ensure(
        cover.count_of(KodairaType::I(2)) == 12 && cover.euler_sum() == 24,
        "cover fibration",
    )?;
    for (i, j) in pairs() {
        let f = core(build_fibration_through(m, i, j))?;
        core(f.verify())?;
        let d = core(delta(i, j))?;
        let c = core(transform_double_cover(&f, m, d))?;
        ensure(
            f.euler_sum() == 24
                && even_eight_from_fibers(&f, m, d)
                && c.count_of(KodairaType::I(2)) == 12,
            format!("sweep fails at ({i}, {j})"),
        )?;
    }
    Ok(())
}

fn cover_calculus() -> Verdict {
    let t = core(construct_t())?.t;
    ensure(
        t.euler == 10 && t.k_squared == 2,
        format!("e(T) = {}, K^2 = {}", t.euler, t.k_squared),
    )?;
    ensure(noether_chi(&t) == int(1), "χ(O_T)")?;
    ensure(verify_weak_del_pezzo(&t), "weak del Pezzo numbers")?;
    let table = core(curve_table_t())?;
    for (a, b, v) in [
        ("E1", "E1", 2),
        ("E2", "E2", 2),
        ("E1", "E2", 2),
        ("W1", "W1", 0),
        ("W2", "W2", 0),
        ("W1", "W2", 4),
        ("E1", "W2", 2),
        ("E2", "W1", 2),
    ] {
        ensure(table.get(a, b) == Some(v), format!("{a}.{b}"))?;
    }
    let aggregates: Vec<_> = table
        .identities
        .iter()
        .filter(|i| i.name.starts_with('('))
        .collect();
    ensure(
        aggregates.len() == 3 && aggregates.iter().all(|i| i.holds() && i.lhs == 8),
        "aggregates",
    )?;
    let x = core(check_x())?;
    ensure(
        x.euler == 24 && x.canonical_is_zero && x.chi == int(2),
        format!("{x:?}"),
    )?;
    let s = core(sixteen_curves_on_x())?;
    let counts: Vec<usize> = s.families.iter().map(|f| f.count).collect();
    ensure(counts == [12, 2, 2], format!("{counts:?}"))?;
    ensure(
        s.identities[0].holds() && s.identities[0].lhs == 8,
        "W'/W'' aggregate",
    )
}

fn polarization() -> Verdict {
    ensure(
        core(isogeny_polarization_type(&[1, 1], 2))? == [1, 2],
        "type",
    )
}

fn determinism_and_exactness() -> Verdict {
    let a = kummerlab(&["--report", "json"]);
    let b = kummerlab(&["--report", "json"]);
    ensure(
        report_without_elapsed(&a) == report_without_elapsed(&b),
        "JSON reports differ",
    )?;
    let strip = |o: &std::process::Output| {
        String::from_utf8_lossy(&o.stdout)
            .lines()
            .filter(|l| !l.contains("\"elapsed_ms\""))
            .collect::<Vec<_>>()
            .join("\n")
    };
    ensure(strip(&a) == strip(&b), "JSON bytes differ")?;
    let hits = float_mentions();
    ensure(hits.is_empty(), format!("floating point at {hits:?}"))
}

fn main() -> ExitCode {
    let m = NarukiModel::new();
    let evens = m.scan_even_sets();
    let criteria: Vec<(&str, Verdict)> = vec![
        ("even-set census", even_set_census(&m, &evens)),
        ("code structure", code_structure(&evens)),
        ("lattice model, 16_6 configuration and α", naruki_model(&m)),
        (
            "even-eight identity for all 15 pairs",
            even_eight_identity(&m),
        ),
        ("Nikulin lattice", nikulin(&m)),
        (
            "containment queries and discriminant elements",
            containment_queries(&m),
        ),
        ("elliptic fibration", fibration(&m)),
        ("cover calculus", cover_calculus()),
        ("polarization arithmetic", polarization()),
        ("determinism and exactness", determinism_and_exactness()),
    ];
    let mut failed = 0;
    for (n, (name, verdict)) in criteria.iter().enumerate() {
        match verdict {
            Ok(()) => println!("criterion {:>2} PASS  {name}", n + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", n + 1);
            }
        }
    }
    println!(
        "{} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
