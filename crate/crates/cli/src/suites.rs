//! Named verification suites. Finite suites run exhaustively over every
//! ground size up to `n`; symbolic suites run over bounded grids of
//! naturals and prime indices.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use toposcope::constructions::{
    alexandroff_meet_decomposition, meet_sober_decomposition, t1_join_decomposition, tau_a, tau_star,
    NoncomparablePair, RefinementKind,
};
use toposcope::lattice::{enumerate_by_family, enumerate_topologies, join, meet, minimal_in_class, TopologyFamily};
use toposcope::order::{alexandroff_topology, scott_topology, upper_topology, Poset};
use toposcope::symnat::{
    basic_open_meet, cofinite_join_witness, cofinite_not_sober_certificate, in_primorial_set,
    meet_chain_irreducibility_witness, nth_prime, primorial_set_certificate, t2_separation, BasicOpen, Carrier,
    MeetResult, UpSet,
};
use toposcope::{FiniteTopology, PointSet, PropertyKind};

use crate::report::{topology, Evidence};

type Outcome = toposcope::Result<Vec<Evidence>>;

/// Parameters shared by all suites; each suite reads only what it needs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Params {
    pub n: usize,
    pub max_index: usize,
    pub bound: Option<u64>,
    pub seed: u64,
}

impl Default for Params {
    fn default() -> Self {
        Params { n: 4, max_index: 4, bound: None, seed: 0x5eed }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Uses {
    Size,
    MaxIndex,
    Bound(u64),
    BoundAndSeed(u64),
    Nothing,
}

pub struct Suite {
    pub name: &'static str,
    pub summary: &'static str,
    pub uses: Uses,
    run: fn(&Params) -> Outcome,
}

impl Suite {
    pub fn run(&self, p: &Params) -> Outcome {
        (self.run)(p)
    }

    /// The parameters this suite actually depends on, as they go into the report.
    pub fn report_params(&self, p: &Params) -> BTreeMap<String, Value> {
        let mut out = BTreeMap::new();
        match self.uses {
            Uses::Size => {
                out.insert("n".into(), json!(p.n));
            }
            Uses::MaxIndex => {
                out.insert("max_index".into(), json!(p.max_index));
                out.insert("bound".into(), json!(p.bound.unwrap_or(20)));
            }
            Uses::Bound(default) => {
                out.insert("bound".into(), json!(p.bound.unwrap_or(default)));
            }
            Uses::BoundAndSeed(default) => {
                out.insert("bound".into(), json!(p.bound.unwrap_or(default)));
                out.insert("seed".into(), json!(p.seed));
            }
            Uses::Nothing => {}
        }
        out
    }
}

pub const SUITES: &[Suite] = &[
    Suite {
        name: "enumeration",
        summary: "topology counts via preorders and via family search agree",
        uses: Uses::Size,
        run: enumeration,
    },
    Suite {
        name: "sober-collapse",
        summary: "on finite spaces sober ⇔ T0, and sober ⇒ well-filtered ⇒ d-space",
        uses: Uses::Size,
        run: sober_collapse,
    },
    Suite {
        name: "t1-join",
        summary: "the discrete topology is a join of sober τ_A topologies",
        uses: Uses::Size,
        run: t1_join,
    },
    Suite {
        name: "meet-sober",
        summary: "every topology is the meet of sober refinements",
        uses: Uses::Size,
        run: meet_sober,
    },
    Suite {
        name: "alexandroff-meet",
        summary: "every Alexandroff topology is a meet of sober Alexandroff topologies",
        uses: Uses::Size,
        run: alexandroff_meet,
    },
    Suite {
        name: "upper-sets",
        summary: "TD, T1+sober, TD+sober are upward closed; sober joins above a sober topology are sober",
        uses: Uses::Size,
        run: upper_sets,
    },
    Suite {
        name: "tau-star",
        summary: "coarsening at a noncomparable pair keeps T0 and sobriety",
        uses: Uses::Size,
        run: tau_star_suite,
    },
    Suite {
        name: "minimal-sober",
        summary: "minimal sober topologies are exactly the total orders",
        uses: Uses::Size,
        run: minimal_sober,
    },
    Suite {
        name: "cofinite-join",
        summary: "the cofinite topology is a join of two sober topologies but is not sober",
        uses: Uses::Nothing,
        run: cofinite_join,
    },
    Suite {
        name: "crt-chain",
        summary: "separation in each chain member, common points of basic opens in the meet",
        uses: Uses::MaxIndex,
        run: crt_chain,
    },
    Suite {
        name: "remark-A",
        summary: "the primorial set is closed in the meet of the chain",
        uses: Uses::Bound(50),
        run: remark_a,
    },
    Suite {
        name: "upset-algebra",
        summary: "Boolean-algebra laws for ultimately periodic sets",
        uses: Uses::BoundAndSeed(10_000),
        run: upset_algebra,
    },
];

pub fn find(name: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.name == name)
}

fn all(n: usize) -> toposcope::Result<Vec<FiniteTopology>> {
    enumerate_topologies(n, None)
}

const COUNTS: [usize; 7] = [1, 1, 4, 29, 355, 6942, 209_527];

fn enumeration(p: &Params) -> Outcome {
    let mut counts = Evidence::new("preorder enumeration matches the known counts");
    let mut agree = Evidence::new("family-level search finds the same topologies");
    for (n, &expected) in COUNTS.iter().enumerate().take(p.n + 1) {
        let mut by_preorder = all(n)?;
        by_preorder.sort();
        counts.check(by_preorder.len() == expected, || json!({ "n": n, "count": by_preorder.len() }));
        let by_family = enumerate_by_family(n)?;
        agree.check(by_family == by_preorder, || json!({ "n": n, "family_count": by_family.len() }));
    }
    let listed: Vec<String> = COUNTS[..=p.n].iter().map(usize::to_string).collect();
    let counts = counts.with_claim(format!("topology counts for n = 0..{} are {}", p.n, listed.join(", ")));
    let mut out = vec![counts, agree];
    if p.n >= 3 {
        let t0 = enumerate_topologies(3, Some(PropertyKind::T0))?.len();
        let mut e = Evidence::new("19 T0 topologies on 3 points");
        e.check(t0 == 19, || json!({ "count": t0 }));
        out.push(e);
    }
    Ok(out)
}

fn sober_collapse(p: &Params) -> Outcome {
    let mut collapse = Evidence::new("sober ⇔ T0");
    let mut chain = Evidence::new("sober ⇒ well-filtered ⇒ d-space");
    for n in 0..=p.n {
        for t in all(n)? {
            let (sober, wf) = (t.is_sober(), t.is_well_filtered());
            collapse.check(sober == t.is_t0(), || topology(&t));
            chain.check((!sober || wf) && (!wf || t.is_d_space()), || topology(&t));
        }
    }
    Ok(vec![collapse, chain])
}

/// Closed sets of τ_A from the formula: subsets of `X − {x_A, y_A}`, those
/// subsets joined with `A`, and `X`.
fn tau_a_closed(n: usize, a: PointSet, xa: usize, ya: usize) -> BTreeSet<PointSet> {
    let free = PointSet::full(n).remove(xa).remove(ya);
    let mut out = BTreeSet::from([PointSet::full(n)]);
    for f in PointSet::all(n).filter(|f| f.is_subset(free)) {
        out.insert(f);
        out.insert(f.union(a));
    }
    out
}

fn t1_join(p: &Params) -> Outcome {
    let mut family = Evidence::new("decomposition members are sober and join to the discrete topology");
    let mut closed = Evidence::new("closed sets of τ_A match the formula");
    let mut irr = Evidence::new("irreducible closed sets of τ_A are the free singletons, A and X");
    for n in 2..=p.n.max(1) {
        let d = FiniteTopology::discrete(n);
        let fam = t1_join_decomposition(&d)?;
        family.check(fam.iter().all(FiniteTopology::is_sober) && join(&fam)? == d, || json!({ "n": n }));
        for a in PointSet::all(n).filter(|a| !a.is_empty() && *a != d.ground()) {
            for xa in a.iter() {
                for ya in a.complement().iter() {
                    let t = tau_a(&d, a, xa, ya)?;
                    let cx = || json!({ "A": a.bits(), "x": xa, "y": ya, "topology": topology(&t) });
                    let got: BTreeSet<PointSet> = t.closed_sets().into_iter().collect();
                    closed.check(got == tau_a_closed(n, a, xa, ya), cx);
                    let mut expected: Vec<PointSet> = (0..n)
                        .filter(|&x| x != xa && x != ya)
                        .map(|x| PointSet::singleton(n, x).unwrap())
                        .chain([a, d.ground()])
                        .collect();
                    expected.sort();
                    expected.dedup();
                    irr.check(t.irr_closed() == expected, cx);
                }
            }
        }
    }
    Ok(vec![family, closed, irr])
}

fn meet_sober(p: &Params) -> Outcome {
    let mut exact = Evidence::new("constructed refinements are sober, finer, and meet exactly to the input");
    let mut fallback = Evidence::new("meet of all sober refinements agrees");
    let (mut via_f, mut via_pair) = (0, 0);
    for n in 0..=p.n {
        for t in all(n)? {
            let d = meet_sober_decomposition(&t)?;
            let ok = d.family.iter().all(|m| m.is_sober() && t.is_coarser_than(m)) && meet(&d.family)? == t;
            exact.check(ok, || topology(&t));
            fallback.check(d.fallback_agrees, || topology(&t));
            via_f += usize::from(d.uses(RefinementKind::ChoiceFunction));
            via_pair += usize::from(d.uses(RefinementKind::SierpinskiPair));
        }
    }
    let exact = exact.with_claim(format!(
        "constructed refinements are sober, finer, and meet exactly to the input ({via_f} use a choice function, {via_pair} a Sierpiński pair)"
    ));
    Ok(vec![exact, fallback])
}

fn alexandroff_meet(p: &Params) -> Outcome {
    let mut e = Evidence::new("factors are sober and meet to the Alexandroff topology");
    for n in 0..=p.n {
        for poset in Poset::all(n)? {
            let fam = alexandroff_meet_decomposition(&poset);
            let ok = fam.iter().all(FiniteTopology::is_sober) && meet(&fam)? == alexandroff_topology(poset.preorder());
            e.check(ok, || json!({ "n": n, "order": poset.to_string() }));
        }
    }
    Ok(vec![e])
}

fn upper_sets(p: &Params) -> Outcome {
    type Check = fn(&FiniteTopology) -> bool;
    let classes: [(&str, Check); 3] = [
        ("TD", FiniteTopology::is_td),
        ("T1+sober", |t| t.is_t1() && t.is_sober()),
        ("TD+sober", |t| t.is_td() && t.is_sober()),
    ];
    let mut upward: Vec<Evidence> =
        classes.iter().map(|(name, _)| Evidence::new(format!("{name} is inherited by finer topologies"))).collect();
    let mut joins = Evidence::new("joins of sober topologies above a sober topology are sober");
    for n in 0..=p.n {
        let ts = all(n)?;
        let flags: Vec<[bool; 3]> = ts.iter().map(|t| classes.map(|(_, f)| f(t))).collect();
        let sober: Vec<bool> = ts.iter().map(FiniteTopology::is_sober).collect();
        for (i, t) in ts.iter().enumerate() {
            for (j, u) in ts.iter().enumerate().filter(|(_, u)| t.is_coarser_than(u)) {
                for (k, e) in upward.iter_mut().enumerate().filter(|(k, _)| flags[i][*k]) {
                    e.check(flags[j][k], || json!({ "coarser": topology(t), "finer": topology(u) }));
                }
            }
            if !sober[i] {
                continue;
            }
            let above: Vec<&FiniteTopology> =
                ts.iter().zip(&sober).filter(|(u, &s)| s && t.is_coarser_than(u)).map(|(u, _)| u).collect();
            for a in &above {
                for b in &above {
                    joins.check(a.join_with(b).is_sober(), || json!([topology(t), topology(a), topology(b)]));
                }
            }
        }
    }
    upward.push(joins);
    Ok(upward)
}

fn tau_star_suite(p: &Params) -> Outcome {
    let mut coarser = Evidence::new("τ* is strictly coarser and T0");
    let mut keeps = Evidence::new("τ* keeps sobriety, well-filteredness and the d-space property");
    let mut closure = Evidence::new("point closures: cl*{a} = cl{a} ∪ cl{y} if x ∈ cl{a}, else cl{a}");
    let mut order = Evidence::new("u ≤* v ⇔ u ≤ v or (u ≤ y and x ≤ v)");
    for n in 0..=p.n {
        for t in enumerate_topologies(n, Some(PropertyKind::T0))? {
            let spec = t.specialization();
            for pair in NoncomparablePair::all(&t) {
                let (x, y) = (pair.x(), pair.y());
                let s = tau_star(&t, pair)?;
                let cx = || json!({ "topology": topology(&t), "x": x, "y": y });
                coarser.check(s.is_strictly_coarser_than(&t) && s.is_t0(), cx);
                let kept = [PropertyKind::Sober, PropertyKind::WellFiltered, PropertyKind::DSpace]
                    .iter()
                    .all(|&q| !t.has_property(q) || s.has_property(q));
                keeps.check(kept, cx);
                let closures_ok = (0..n).all(|a| {
                    let cl = t.point_closure(a);
                    let expected = if cl.contains(x) { cl.union(t.point_closure(y)) } else { cl };
                    s.point_closure(a) == expected
                });
                closure.check(closures_ok, cx);
                let star = s.specialization();
                let order_ok = (0..n)
                    .all(|u| (0..n).all(|v| star.leq(u, v) == (spec.leq(u, v) || (spec.leq(u, y) && spec.leq(x, v)))));
                order.check(order_ok, cx);
            }
        }
    }
    Ok(vec![coarser, keeps, closure, order])
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn minimal_sober(p: &Params) -> Outcome {
    let n = p.n;
    let minimal = minimal_in_class(n, PropertyKind::Sober)?;
    let orders = permutations(n);
    let chains =
        TopologyFamily::new(n, orders.iter().map(|o| alexandroff_topology(Poset::chain(o).unwrap().preorder())))?;
    let mut same = Evidence::new(format!("{} minimal sober topologies = {} total orders", minimal.len(), orders.len()));
    for t in minimal.iter() {
        same.check(chains.contains(t), || topology(t));
    }
    same.check(minimal.len() == chains.len(), || json!({ "minimal": minimal.len(), "orders": chains.len() }));
    let mut classes = Evidence::new("minimal d-space and minimal well-filtered classes coincide with it");
    for q in [PropertyKind::DSpace, PropertyKind::WellFiltered] {
        classes.check(minimal_in_class(n, q)? == minimal, || json!({ "property": q.name() }));
    }
    let mut upper = Evidence::new("upper and Scott topologies agree on chains");
    for o in &orders {
        let c = Poset::chain(o).unwrap();
        upper.check(upper_topology(&c) == scott_topology(&c), || json!({ "chain": o }));
    }
    Ok(vec![same, classes, upper])
}

fn cofinite_join(_: &Params) -> Outcome {
    let mut witness = Evidence::new("each cofinite U ⊆ ℕ is V₁ ∩ V₂ with 1 ∈ V₁, 2 ∈ V₂ (excluded sets within 1..6)");
    let full = Carrier::N1.full();
    for excluded in 0u32..1 << 6 {
        let u = full.difference(&UpSet::finite((1..=6).filter(|i| excluded >> (i - 1) & 1 == 1)));
        let (v1, v2) = cofinite_join_witness(&u)?;
        witness.check(v1.contains(1) && v2.contains(2) && v1.intersection(&v2) == u, || json!(u.to_string()));
    }
    let cert = cofinite_not_sober_certificate();
    let mut width = Evidence::new("the cofinite topology is not sober and its sober join width is 2");
    width.check(cert.holds() && cert.sober_join_width == 2, || json!({ "width": cert.sober_join_width }));
    Ok(vec![witness, width])
}

fn crt_chain(p: &Params) -> Outcome {
    let k_max = p.max_index;
    let bound = p.bound.unwrap_or(20);
    let mut sep = Evidence::new("");
    for k in 1..=k_max {
        for a in 0..=bound {
            for b in a + 1..=bound {
                let (u, v) = t2_separation(k, a, b)?;
                let ok = u.contains_u64(a)
                    && v.contains_u64(b)
                    && u.lies_in_level(k)
                    && v.lies_in_level(k)
                    && basic_open_meet(&u, &v) == MeetResult::Empty;
                sep.check(ok, || json!({ "level": k, "a": a, "b": b }));
            }
        }
    }
    let sep = sep.with_claim(format!("points a < b ≤ {bound} are separated by basic opens at chain levels 1..{k_max}"));

    // Pairs with all indices of the second above those of the first. Residue
    // vectors are read off a stride through 0..∏p, which covers all of them
    // when the product is small.
    let mut common = Evidence::new("");
    let mut first_witness = None;
    for s1 in 1u32..1 << k_max {
        let top = 32 - s1.leading_zeros() as usize;
        for s2 in 1u32..1 << (k_max - top) {
            let s2 = s2 << top;
            let idx = |s: u32| (1..=k_max).filter(move |k| s >> (k - 1) & 1 == 1).collect::<Vec<_>>();
            let (i1, i2) = (idx(s1), idx(s2));
            let product: u64 = i1.iter().chain(&i2).map(|&k| nth_prime(k)).product();
            for x in (0..product).step_by((product / 256).max(1) as usize) {
                let pick = |ix: &[usize]| ix.iter().map(|&k| (x % nth_prime(k), k)).collect::<Vec<_>>();
                let b1 = BasicOpen::from_indexed(&pick(&i1))?;
                let b2 = BasicOpen::from_indexed(&pick(&i2))?;
                let w = meet_chain_irreducibility_witness(&b1, &b2, None)?;
                let ok = b1.contains(&w.point) && b2.contains(&w.point);
                common.check(ok, || json!({ "first": b1.to_string(), "second": b2.to_string() }));
                first_witness.get_or_insert_with(|| format!("{} ∈ {b1} ∩ {b2}", w.point));
            }
        }
    }
    let example = first_witness.unwrap_or_default();
    let common = common.with_claim(format!(
        "basic opens over disjoint prime indices ≤ {k_max} share a point (first witness {example})"
    ));

    let mut rebased = Evidence::new("overlapping basic opens are re-based around a point of the second");
    for k in 1..=k_max {
        let p_k = nth_prime(k);
        for h in 0..p_k {
            let b1 = BasicOpen::from_indexed(&[(0, k)])?;
            let b2 = BasicOpen::from_indexed(&[(h, k)])?;
            let point = h + p_k;
            let w = meet_chain_irreducibility_witness(&b1, &b2, Some(point))?;
            let ok = w.rebased && b1.contains(&w.point) && w.second.contains(&BigUint::from(point));
            rebased.check(ok, || json!({ "index": k, "residue": h }));
        }
    }
    Ok(vec![sep, common, rebased])
}

fn remark_a(p: &Params) -> Outcome {
    let bound = p.bound.unwrap_or(50);
    let mut e = Evidence::new(format!("every x ≤ {bound} outside A has an open neighbourhood missing A"));
    for x in 0..=bound {
        if in_primorial_set(&BigUint::from(x)) {
            continue;
        }
        let m = (2..).find(|&m| x < nth_prime(m)).unwrap();
        let c = primorial_set_certificate(x, m)?;
        e.check(c.holds(), || json!({ "x": x, "m": m }));
    }
    Ok(vec![e])
}

fn window_agrees(s: &UpSet, bound: u64, f: impl Fn(u64) -> bool) -> bool {
    (0..bound).all(|x| s.contains(x) == f(x))
}

fn binary_laws(a: &UpSet, b: &UpSet) -> bool {
    let w = a.threshold().max(b.threshold()) + 2 * num_integer::lcm(a.period(), b.period());
    let (u, i, d) = (a.union(b), a.intersection(b), a.difference(b));
    window_agrees(&u, w, |x| a.contains(x) || b.contains(x))
        && window_agrees(&i, w, |x| a.contains(x) && b.contains(x))
        && window_agrees(&d, w, |x| a.contains(x) && !b.contains(x))
        && u.complement() == a.complement().intersection(&b.complement())
        && i.complement() == a.complement().union(&b.complement())
        && u == b.union(a)
        && i == b.intersection(a)
        && a.union(&i) == *a
        && a.intersection(&u) == *a
}

fn unary_laws(a: &UpSet) -> bool {
    let c = a.complement();
    window_agrees(&c, a.threshold() + 2 * a.period(), |x| !a.contains(x))
        && c.complement() == *a
        && a.union(&c) == UpSet::naturals()
        && a.intersection(&c).is_empty()
}

fn grid(max_threshold: u64, max_period: u64) -> Vec<UpSet> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for threshold in 0..=max_threshold {
        for period in 1..=max_period {
            for prefix in 0u32..1 << threshold {
                for mask in 0u32..1 << period {
                    let s = UpSet::from_parts(
                        threshold,
                        (0..threshold).filter(|&x| prefix >> x & 1 == 1),
                        period,
                        (0..period).filter(|&r| mask >> r & 1 == 1),
                    )
                    .unwrap();
                    if seen.insert(s.clone()) {
                        out.push(s);
                    }
                }
            }
        }
    }
    out
}

fn random_upset(rng: &mut ChaCha8Rng) -> UpSet {
    let threshold = rng.gen_range(0..=16);
    let period = rng.gen_range(1..=12);
    let prefix: Vec<u64> = (0..threshold).filter(|_| rng.gen_bool(0.5)).collect();
    let residues: Vec<u64> = (0..period).filter(|_| rng.gen_bool(0.5)).collect();
    UpSet::from_parts(threshold, prefix, period, residues).unwrap()
}

fn upset_algebra(p: &Params) -> Outcome {
    let sets = grid(8, 6);
    let probes = grid(2, 2);
    let mut on_grid = Evidence::new(format!(
        "laws hold on all {} sets with threshold ≤ 8 and period ≤ 6, against {} probes",
        sets.len(),
        probes.len()
    ));
    for a in &sets {
        on_grid.check(unary_laws(a), || json!(a.to_string()));
        for b in &probes {
            on_grid.check(binary_laws(a, b), || json!([a.to_string(), b.to_string()]));
        }
    }
    let cases = p.bound.unwrap_or(10_000);
    let mut random = Evidence::new(format!("laws and distributivity hold on {cases} random triples"));
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    for _ in 0..cases {
        let (a, b, c) = (random_upset(&mut rng), random_upset(&mut rng), random_upset(&mut rng));
        let ok = unary_laws(&a)
            && binary_laws(&a, &b)
            && a.intersection(&b.union(&c)) == a.intersection(&b).union(&a.intersection(&c))
            && a.union(&b.intersection(&c)) == a.union(&b).intersection(&a.union(&c));
        random.check(ok, || json!([a.to_string(), b.to_string(), c.to_string()]));
    }
    Ok(vec![on_grid, random])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(name: &str, p: &Params) -> Vec<Evidence> {
        find(name).unwrap().run(p).unwrap()
    }

    #[test]
    fn names_are_unique() {
        let names: BTreeSet<&str> = SUITES.iter().map(|s| s.name).collect();
        assert_eq!(names.len(), SUITES.len());
        assert!(find("no-such-suite").is_none());
    }

    #[test]
    fn small_finite_suites_pass() {
        let p = Params { n: 3, ..Params::default() };
        for s in SUITES.iter().filter(|s| s.uses == Uses::Size) {
            let ev = s.run(&p).unwrap();
            assert!(ev.iter().all(Evidence::holds), "{}", s.name);
            assert!(ev.iter().all(|e| e.instances > 0), "{}", s.name);
        }
    }

    #[test]
    fn minimal_sober_claim_text() {
        let ev = run("minimal-sober", &Params { n: 3, ..Params::default() });
        assert_eq!(ev[0].claim, "6 minimal sober topologies = 6 total orders");
    }

    #[test]
    fn exact_instance_counts() {
        let ev = run("sober-collapse", &Params { n: 3, ..Params::default() });
        assert_eq!(ev[0].instances, 1 + 1 + 4 + 29);
        let ev = run("crt-chain", &Params { max_index: 2, bound: Some(5), ..Params::default() });
        assert_eq!(ev[0].instances, 2 * 15);
        // index pairs ({1},{2}) only, all 6 residue vectors
        assert_eq!(ev[1].instances, 6);
        assert_eq!(ev[2].instances, 2 + 3);
    }

    #[test]
    fn symbolic_suites_pass() {
        for name in ["cofinite-join", "crt-chain", "remark-A"] {
            assert!(run(name, &Params::default()).iter().all(Evidence::holds), "{name}");
        }
        let ev = run("upset-algebra", &Params { bound: Some(200), ..Params::default() });
        assert!(ev.iter().all(Evidence::holds));
    }
}
