//! Checks on the even node sets and the lattice model itself.

use std::collections::BTreeMap;

use kummerlab_core::code::{check_affine_hyperplane_family, BinaryCode, NodeSet};
use kummerlab_core::labels::{pairs, NodeLabel, TropeLabel};
use kummerlab_core::lattice::{int, RationalVector};
use kummerlab_core::naruki::{all_deltas, complement_triple, delta, trope_nodes};
use kummerlab_core::polarization::isogeny_polarization_type;
use serde_json::json;

use super::{nodes_json, pair_id, Check, Outcome};
use crate::interchange::DivisorClassJson;

const CENSUS: &str = "census of even node sets";
const CODE: &str = "even sets as the hyperplanes of a four-dimensional affine space";
const NARUKI: &str = "generators and relations of the Néron–Severi lattice";
const FIFTEEN: &str = "fifteen even eights through the nodes Eij";
const QUERIES: &str = "(−2)-class argument for the non-isomorphism criterion";
const POLARIZATION: &str = "polarization type after a degree-two isogeny";

fn nodes(list: &[(u8, u8)]) -> NodeSet {
    NodeSet::from_nodes(list.iter().map(|&(i, j)| NodeLabel::E(i, j)))
}

fn weight_histogram(sets: &[NodeSet]) -> BTreeMap<u32, usize> {
    let mut h = BTreeMap::new();
    for s in sets {
        *h.entry(s.weight()).or_insert(0) += 1;
    }
    h
}

fn enumerator_text(h: &BTreeMap<u32, usize>) -> String {
    h.iter()
        .map(|(&w, &n)| match (w, n) {
            (0, n) => n.to_string(),
            (w, 1) => format!("z^{w}"),
            (w, n) => format!("{n}z^{w}"),
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

pub(super) fn checks() -> Vec<Check> {
    let mut out = vec![
        Check::new(
            "even_sets.count30",
            "exhaustive scan of all 2^16 node subsets finds the empty set, 30 eights and the full set",
            CENSUS,
            |ctx| {
                let h = weight_histogram(ctx.even_sets());
                let expected = BTreeMap::from([(0, 1), (8, 30), (16, 1)]);
                Ok(Outcome::verdict(
                    h == expected,
                    format!("{} even sets, by weight {h:?}", ctx.even_sets().len()),
                )
                .with_data(json!({ "total": ctx.even_sets().len(), "by_weight": h })))
            },
        ),
        Check::new(
            "even_sets.fifteen_delta",
            "the even eights avoiding E0 are exactly the fifteen Δij",
            FIFTEEN,
            |ctx| {
                let e0_free: Vec<NodeSet> = ctx
                    .even_eights()
                    .into_iter()
                    .filter(|s| !s.contains(NodeLabel::E0))
                    .collect();
                let mut deltas: Vec<NodeSet> = all_deltas().into_iter().map(|(_, d)| d).collect();
                deltas.sort();
                let listing: BTreeMap<String, Vec<String>> = all_deltas()
                    .into_iter()
                    .map(|((i, j), d)| (format!("D{}", pair_id(i, j)), nodes_json(d)))
                    .collect();
                Ok(Outcome::verdict(
                    e0_free == deltas,
                    format!("{} E0-free even eights, all of the form Δij", e0_free.len()),
                )
                .with_data(listing))
            },
        ),
        Check::new(
            "even_sets.full_set",
            "half the sum of all sixteen nodes is a lattice vector",
            CENSUS,
            |ctx| Ok(Outcome::verdict(ctx.model().is_even(NodeSet::FULL), "all sixteen nodes form an even set")),
        ),
        Check::new(
            "code.linear_dim5",
            "the even sets form a linear binary code of dimension 5",
            CODE,
            |ctx| {
                let code = BinaryCode::from_even_sets(ctx.even_sets())?;
                Ok(Outcome::verdict(
                    code.dimension() == 5 && code.len() == 32,
                    format!("{} codewords, dimension {}", code.len(), code.dimension()),
                ))
            },
        ),
        Check::new(
            "code.weight_enumerator",
            "weight enumerator 1 + 30z^8 + z^16",
            CODE,
            |ctx| {
                let code = BinaryCode::from_even_sets(ctx.even_sets())?;
                let h = code.weight_enumerator();
                let text = enumerator_text(&h);
                Ok(Outcome::verdict(text == "1 + 30z^8 + z^16", text).with_data(h))
            },
        ),
        Check::new(
            "code.eight_intersections",
            "distinct even eights meet in 0 or 4 nodes",
            CODE,
            |ctx| {
                let eights = ctx.even_eights();
                let mut meets: BTreeMap<u32, usize> = BTreeMap::new();
                for (k, a) in eights.iter().enumerate() {
                    for b in &eights[k + 1..] {
                        *meets.entry(a.intersection(*b).weight()).or_insert(0) += 1;
                    }
                }
                let ok = meets.keys().all(|&m| m == 0 || m == 4);
                Ok(Outcome::verdict(ok, format!("pair intersections {meets:?}")).with_data(meets))
            },
        ),
        Check::new(
            "code.affine_hyperplanes",
            "the 30 eights are closed under complement with intersections in {0, 4}",
            CODE,
            |ctx| {
                let eights = ctx.even_eights();
                let ok = eights.len() == 30 && check_affine_hyperplane_family(&eights);
                Ok(Outcome::verdict(ok, "15 parallel classes of 2 hyperplanes"))
            },
        ),
        Check::new(
            "lattice.rank17",
            "nodes, tropes and L span a lattice of rank 17",
            NARUKI,
            |ctx| {
                let r = ctx.model().ns().rank();
                Ok(Outcome::verdict(r == 17, format!("rank {r}")))
            },
        ),
        Check::new(
            "lattice.tropes_contained",
            "all sixteen trope classes ½(L − Σ nodes) lie in the lattice",
            NARUKI,
            |ctx| {
                let m = ctx.model();
                let mut missing = Vec::new();
                let mut classes = BTreeMap::new();
                for t in TropeLabel::all() {
                    let c = m.trope_class(t);
                    if !m.ns().contains(&c)? {
                        missing.push(t.to_string());
                    }
                    classes.insert(t.to_string(), DivisorClassJson::encode(m.space(), &c)?);
                }
                Ok(Outcome::verdict(missing.is_empty(), format!("{} of 16 tropes outside", missing.len()))
                    .with_data(classes))
            },
        ),
        Check::new(
            "lattice.curve_norms",
            "nodes and tropes are (−2)-classes; nodes are disjoint, and so are tropes",
            NARUKI,
            |ctx| {
                let m = ctx.model();
                let mut bad = Vec::new();
                let nodes: Vec<_> = NodeLabel::all().into_iter().map(|n| (n.to_string(), m.node_class(n))).collect();
                let tropes: Vec<_> = TropeLabel::all().into_iter().map(|t| (t.to_string(), m.trope_class(t))).collect();
                for family in [&nodes, &tropes] {
                    for (k, (la, a)) in family.iter().enumerate() {
                        if m.inner(a, a)? != int(-2) {
                            bad.push(format!("{la}^2"));
                        }
                        for (lb, b) in &family[k + 1..] {
                            if m.inner(a, b)? != int(0) {
                                bad.push(format!("{la}.{lb}"));
                            }
                        }
                    }
                }
                Ok(Outcome::verdict(bad.is_empty(), format!("{} violations", bad.len())).with_data(bad))
            },
        ),
        Check::new(
            "config.sixteen_six",
            "the trope/node incidence matrix is 0/1 with all row and column sums 6",
            NARUKI,
            |ctx| {
                let inc = ctx.model().incidence_matrix();
                let binary = inc.iter().flatten().all(|&x| x == 0 || x == 1);
                let rows = inc.iter().all(|r| r.iter().sum::<i64>() == 6);
                let cols = (0..16).all(|k| inc.iter().map(|r| r[k]).sum::<i64>() == 6);
                Ok(Outcome::verdict(binary && rows && cols, "16_6 configuration")
                    .with_data(inc.iter().map(|r| r.to_vec()).collect::<Vec<_>>()))
            },
        ),
        Check::new(
            "lattice.discriminant",
            "discriminant group of the lattice via Smith normal form",
            NARUKI,
            |ctx| {
                let g = ctx.model().ns().discriminant_group()?;
                let factors: Vec<String> = g.invariant_factors.iter().map(|f| f.to_string()).collect();
                Ok(Outcome::verdict(
                    factors == ["2", "2", "2", "2", "4"],
                    format!("invariant factors {factors:?}, order {}", g.order()),
                )
                .with_data(json!({ "invariant_factors": factors, "order": g.order().to_string() })))
            },
        ),
        Check::new(
            "alpha.isometry",
            "α preserves the form and maps the lattice onto itself",
            NARUKI,
            |ctx| {
                let m = ctx.model();
                Ok(Outcome::verdict(m.ns().is_isometry(&m.alpha_images())?, "checked on all 17 basis vectors"))
            },
        ),
        Check::new(
            "alpha.involution",
            "α ∘ α is the identity on all 17 basis vectors",
            NARUKI,
            |ctx| {
                let m = ctx.model();
                let mut ok = true;
                for k in 0..17 {
                    let e = RationalVector::unit(17, k);
                    ok &= m.alpha(&m.alpha(&e)?)? == e;
                }
                Ok(Outcome::verdict(ok, "α² = id"))
            },
        ),
        Check::new(
            "alpha.fixed_classes",
            "α fixes L − E0 and every Eij, and sends E0 to the (−2)-class 2L − 3E0",
            NARUKI,
            |ctx| {
                let m = ctx.model();
                let e0 = m.node_class(NodeLabel::E0);
                let h = m.l_class() - &e0;
                let mut ok = m.alpha(&h)? == h;
                for (i, j) in pairs() {
                    let e = m.node_class(NodeLabel::E(i, j));
                    ok &= m.alpha(&e)? == e;
                }
                let image = m.alpha(&e0)?;
                ok &= image == m.l_class().scale_int(2) - e0.scale_int(3);
                ok &= m.inner(&image, &image)? == int(-2);
                Ok(Outcome::verdict(ok, "fixed sublattice contains L − E0 and the fifteen Eij"))
            },
        ),
        Check::new(
            "delta.identity.literal_sign",
            "the rearranged identity as printed, with +ΣΔij on the right",
            FIFTEEN,
            |ctx| {
                let m = ctx.model();
                let mut literal = 0;
                let mut corrected = 0;
                for (i, j) in pairs() {
                    let lhs = m.even_eight_lhs(i, j)?;
                    let sum = m.node_sum(delta(i, j)?);
                    literal += usize::from(lhs == sum);
                    corrected += usize::from(lhs == -sum);
                }
                Ok(Outcome::flagged(format!(
                    "2C1i + 2C1j − 2(L − E0) + 2Eij equals −ΣΔij for {corrected} of 15 pairs and +ΣΔij for {literal}; the delta.identity.* checks use the minus sign"
                ))
                .with_data(json!({ "plus_sign_holds": literal, "minus_sign_holds": corrected })))
            },
        ),
        Check::new(
            "containment.quadruple_1324",
            "the E0-free even eights containing {E13, E14, E23, E24} are exactly Δ12 and Δ34",
            QUERIES,
            |ctx| {
                let hits = ctx.model().even_eights_containing(nodes(&[(1, 3), (1, 4), (2, 3), (2, 4)]));
                let e0_free: Vec<NodeSet> = hits.iter().copied().filter(|w| !w.contains(NodeLabel::E0)).collect();
                let mut expected = vec![delta(1, 2)?, delta(3, 4)?];
                expected.sort();
                Ok(Outcome::verdict(e0_free == expected, "Δ12 and Δ34").with_data(json!({
                    "e0_free": e0_free.iter().map(|&w| nodes_json(w)).collect::<Vec<_>>(),
                    "all": hits.iter().map(|&w| nodes_json(w)).collect::<Vec<_>>(),
                })))
            },
        ),
        Check::new(
            "containment.quadruple_1324_full",
            "all even eights containing {E13, E14, E23, E24}, including those through E0",
            QUERIES,
            |ctx| {
                let hits = ctx.model().even_eights_containing(nodes(&[(1, 3), (1, 4), (2, 3), (2, 4)]));
                let extra: Vec<Vec<String>> = hits
                    .iter()
                    .filter(|w| w.contains(NodeLabel::E0))
                    .map(|&w| nodes_json(w))
                    .collect();
                Ok(Outcome::flagged(format!(
                    "{} even eights contain the quadruple: Δ12, Δ34 and {} more through E0",
                    hits.len(),
                    extra.len()
                ))
                .with_data(json!({ "through_e0": extra })))
            },
        ),
        Check::new(
            "containment.quadruple_1223_1535",
            "even eights containing {E12, E23, E15, E35}",
            QUERIES,
            |ctx| {
                let hits = ctx.model().even_eights_containing(nodes(&[(1, 2), (2, 3), (1, 5), (3, 5)]));
                let named: Vec<String> = hits
                    .iter()
                    .map(|&w| {
                        all_deltas()
                            .into_iter()
                            .find(|(_, d)| *d == w)
                            .map(|((i, j), _)| format!("D{}", pair_id(i, j)))
                            .unwrap_or_else(|| nodes_json(w).join(" "))
                    })
                    .collect();
                let has_d25 = hits.contains(&delta(2, 5)?);
                Ok(Outcome::flagged(format!(
                    "answer set {named:?}; Δ25 {} among them",
                    if has_d25 { "is" } else { "is not" }
                ))
                .with_data(named))
            },
        ),
        Check::new(
            "discriminant.elements",
            "½(E13+E14+E23+E24) and ½(E12+E23+E15+E35) are independent nonzero classes of L*/L",
            QUERIES,
            |ctx| {
                let d = ctx.model().discriminant_elements();
                let probe = |p: kummerlab_core::naruki::DualProbe| json!({ "in_dual": p.in_dual, "in_lattice": p.in_lattice });
                Ok(Outcome::verdict(d.independent(), "both in the dual, outside the lattice, and distinct")
                    .with_data(json!({ "first": probe(d.first), "second": probe(d.second), "sum": probe(d.sum) })))
            },
        ),
        Check::new(
            "relation3.indexing",
            "trope relations for Cjk indexed by (3,3)-partitions of {1, …, 6}",
            NARUKI,
            |ctx| {
                let m = ctx.model();
                let mut rows = BTreeMap::new();
                let mut all_in = true;
                for (j, k) in pairs().filter(|&(j, _)| j >= 2) {
                    let t = TropeLabel::C(j, k);
                    all_in &= m.ns().contains(&m.trope_class(t))?;
                    let [a, b, c] = complement_triple(j, k);
                    rows.insert(t.to_string(), json!({ "partition": format!("1{j}{k}|{a}{b}{c}"), "nodes": nodes_json(trope_nodes(t)) }));
                }
                Ok(Outcome::flagged(format!(
                    "the index range of this relation is printed two ways; {} relations built from (3,3)-partitions, all tropes {} the lattice",
                    rows.len(),
                    if all_in { "in" } else { "NOT all in" }
                ))
                .with_data(rows))
            },
        ),
        Check::new(
            "polarization.type12",
            "a principal polarization pulls back to type (1, 2) along a degree-two isogeny",
            POLARIZATION,
            |_| {
                let t = isogeny_polarization_type(&[1, 1], 2)?;
                Ok(Outcome::verdict(t == [1, 2], format!("(1, 1) -> {t:?}")))
            },
        ),
    ];
    for (i, j) in pairs() {
        out.push(Check::new(
            format!("delta.identity.{}", pair_id(i, j)),
            format!("2C1{i} + 2C1{j} − 2(L − E0) + 2E{i}{j} = −ΣΔ{i}{j} exactly"),
            FIFTEEN,
            move |ctx| {
                let ok = ctx.model().even_eight_identity(i, j)?;
                Ok(Outcome::verdict(
                    ok,
                    format!("exact vector identity for ({i}, {j})"),
                ))
            },
        ));
    }
    out
}
