//! The smash product `(Q_{G,W}, I_{G,W})` of a bound quiver with a
//! homogeneous weight, its covering morphism `F_{G,W}` and the G-action.
//!
//! Vertices are `x^{(a)}`, arrows `α^{(a)}: x^{(a)} → y^{(W(α)a)}`, and a
//! path lifts as `μ^{(a)} = α_n^{(a_{n-1}⋯a_1 a)}⋯α_1^{(a)}`. The action is
//! `X_c: x^{(a)} ↦ x^{(ac)}`. For infinite groups only the layers listed in
//! a window are built.

use std::collections::{BTreeSet, HashMap};

use serde::{Serialize, Serializer};

use crate::brauer::{BrauerPermutation, HalfEdge};
use crate::error::{Error, Result};
use crate::groups::{GroupElement, GroupSpec};
use crate::quiver::{brauer_quiver_parts, Arrow, BoundQuiver, Path, Relation};
use crate::smash::{smash_brauer, CoveredHalfEdge};
use crate::weights::{is_homogeneous_quiver, GWeight};

/// `(base index, layer index)` of a lifted vertex, arrow or relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lift {
    pub base: usize,
    pub layer: usize,
}

/// An arrow `α^{(a)}` whose source lies in the window but whose target
/// `W(α)a` does not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryArrow {
    pub name: String,
    pub lift: Lift,
    pub target_element: GroupElement,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoveringQuiver {
    pub group: GroupSpec,
    pub base: BoundQuiver,
    /// `W(α)` per base arrow.
    pub weight: Vec<GroupElement>,
    /// The group elements whose layers were built.
    pub layers: Vec<GroupElement>,
    pub quiver: BoundQuiver,
    /// `F_{G,W}` on vertices, arrows and relation generators.
    pub vertex_lift: Vec<Lift>,
    pub arrow_lift: Vec<Lift>,
    pub relation_lift: Vec<Lift>,
    pub boundary: Vec<BoundaryArrow>,
    /// Whether every layer of a finite group is present.
    pub complete: bool,
}

/// `name@word`.
pub fn lifted_name(name: &str, word: &str) -> String {
    format!("{name}@{word}")
}

/// `(Q_{G,W}, I_{G,W})`. `window` lists the layers to build; it may be
/// omitted for a finite group, which then gets all of its layers.
pub fn smash_quiver(q: &BoundQuiver, w: &GWeight, window: Option<&[GroupElement]>) -> Result<CoveringQuiver> {
    let group = w.group().clone();
    let weight = w.on_quiver(q)?;
    if let Some(witness) = is_homogeneous_quiver(q, w)?.witness {
        return Err(Error::NotHomogeneous { witness });
    }
    let layers: Vec<GroupElement> = match window {
        Some(list) => {
            let mut out: Vec<GroupElement> = Vec::new();
            for g in list {
                if !group.contains(g) {
                    return Err(Error::ElementMismatch(format!("{g:?}")));
                }
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
            out
        }
        None if group.is_finite() => group.enumerate()?,
        None => return Err(Error::WindowRequired),
    };
    let complete = group.order()?.finite() == Some(layers.len() as u64);
    let layer_of: HashMap<&GroupElement, usize> = layers.iter().enumerate().map(|(k, g)| (g, k)).collect();
    let words = layers.iter().map(|g| group.format_word(g)).collect::<Result<Vec<_>>>()?;
    let nv = q.vertices.len();

    let mut vertices = Vec::with_capacity(nv * layers.len());
    let mut vertex_lift = Vec::with_capacity(nv * layers.len());
    for (layer, word) in words.iter().enumerate() {
        for (x, name) in q.vertices.iter().enumerate() {
            vertices.push(lifted_name(name, word));
            vertex_lift.push(Lift { base: x, layer });
        }
    }

    let mut arrows = Vec::new();
    let mut arrow_lift = Vec::new();
    let mut boundary = Vec::new();
    let mut arrow_at: HashMap<Lift, usize> = HashMap::new();
    for (layer, a) in layers.iter().enumerate() {
        for (i, alpha) in q.arrows.iter().enumerate() {
            let lift = Lift { base: i, layer };
            let name = lifted_name(&alpha.name, &words[layer]);
            let t = group.mul_unchecked(&weight[i], a);
            match layer_of.get(&t) {
                Some(&tl) => {
                    arrow_at.insert(lift, arrows.len());
                    arrows.push(Arrow {
                        name,
                        source: layer * nv + alpha.source,
                        target: tl * nv + alpha.target,
                    });
                    arrow_lift.push(lift);
                }
                None => boundary.push(BoundaryArrow { name, lift, target_element: t }),
            }
        }
    }

    let lift_path = |path: &Path, layer: usize| -> Option<Path> {
        let mut at = layers[layer].clone();
        let mut out = Vec::with_capacity(path.len());
        for &i in path.arrows() {
            out.push(*arrow_at.get(&Lift { base: i, layer: *layer_of.get(&at)? })?);
            at = group.mul_unchecked(&weight[i], &at);
        }
        Some(Path(out))
    };
    let mut relations = Vec::new();
    let mut relation_lift = Vec::new();
    for layer in 0..layers.len() {
        for (r, rel) in q.relations.iter().enumerate() {
            let terms: Option<Vec<(i64, Path)>> =
                rel.terms.iter().map(|(c, p)| lift_path(p, layer).map(|lp| (*c, lp))).collect();
            if let Some(terms) = terms {
                relations.push(Relation { terms });
                relation_lift.push(Lift { base: r, layer });
            }
        }
    }
    // Homogeneity makes every lifted generator a combination of parallel paths.
    let quiver = BoundQuiver::new(vertices, arrows, relations)?;
    Ok(CoveringQuiver {
        group,
        base: q.clone(),
        weight,
        layers,
        quiver,
        vertex_lift,
        arrow_lift,
        relation_lift,
        boundary,
        complete,
    })
}

impl CoveringQuiver {
    fn layer_index(&self) -> HashMap<&GroupElement, usize> {
        self.layers.iter().enumerate().map(|(k, g)| (g, k)).collect()
    }

    fn vertex_index(&self) -> HashMap<Lift, usize> {
        self.vertex_lift.iter().enumerate().map(|(i, &l)| (l, i)).collect()
    }

    fn arrow_index(&self) -> HashMap<Lift, usize> {
        self.arrow_lift.iter().enumerate().map(|(i, &l)| (l, i)).collect()
    }

    /// Layer of `a·c` for the layer of `a`, if it was built.
    fn shift(&self, layer: usize, c: &GroupElement, layers: &HashMap<&GroupElement, usize>) -> Option<usize> {
        layers.get(&self.group.mul_unchecked(&self.layers[layer], c)).copied()
    }

    /// `X_c` on a vertex; `None` when the image lies outside the window.
    pub fn act_vertex(&self, v: usize, c: &GroupElement) -> Option<usize> {
        let l = self.vertex_lift[v];
        let layer = self.shift(l.layer, c, &self.layer_index())?;
        self.vertex_index().get(&Lift { base: l.base, layer }).copied()
    }

    /// `X_c` on an arrow; `None` when the image lies outside the window.
    pub fn act_arrow(&self, i: usize, c: &GroupElement) -> Option<usize> {
        let l = self.arrow_lift[i];
        let layer = self.shift(l.layer, c, &self.layer_index())?;
        self.arrow_index().get(&Lift { base: l.base, layer }).copied()
    }

    /// Whether every arrow of `x^+` and `x^-` in the full cover lands in
    /// the window. Always true for complete coverings.
    pub fn is_interior(&self, v: usize) -> bool {
        if self.complete {
            return true;
        }
        let layers = self.layer_index();
        let Lift { base: x, layer } = self.vertex_lift[v];
        let a = &self.layers[layer];
        let g = &self.group;
        self.base.out_arrows(x).iter().all(|&i| layers.contains_key(&g.mul_unchecked(&self.weight[i], a)))
            && self.base.in_arrows(x).iter().all(|&i| {
                layers.contains_key(&g.mul_unchecked(&g.inv_unchecked(&self.weight[i]), a))
            })
    }

    /// Copy with one arrow (and every relation through it) removed.
    pub fn without_arrow(&self, i: usize) -> CoveringQuiver {
        let mut out = self.clone();
        out.quiver.arrows.remove(i);
        out.arrow_lift.remove(i);
        let fix = |j: usize| if j > i { Some(j - 1) } else if j == i { None } else { Some(j) };
        let mut relations = Vec::new();
        let mut relation_lift = Vec::new();
        for (rel, lift) in self.quiver.relations.iter().zip(&self.relation_lift) {
            let terms: Option<Vec<(i64, Path)>> = rel
                .terms
                .iter()
                .map(|(c, p)| p.arrows().iter().map(|&j| fix(j)).collect::<Option<Vec<_>>>().map(|v| (*c, Path(v))))
                .collect();
            if let Some(terms) = terms {
                relations.push(Relation { terms });
                relation_lift.push(*lift);
            }
        }
        out.quiver.relations = relations;
        out.relation_lift = relation_lift;
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoveringCheck {
    VertexSurjective,
    ArrowMorphism,
    OutBijection,
    InBijection,
    ActionAutomorphism,
    FreeAction,
    AdmissibleAction,
    OrbitQuiver,
    RelationLift,
}

impl CoveringCheck {
    pub fn as_str(self) -> &'static str {
        match self {
            CoveringCheck::VertexSurjective => "vertex surjectivity",
            CoveringCheck::ArrowMorphism => "arrow endpoints",
            CoveringCheck::OutBijection => "x+ bijection",
            CoveringCheck::InBijection => "x- bijection",
            CoveringCheck::ActionAutomorphism => "action by automorphisms",
            CoveringCheck::FreeAction => "free action",
            CoveringCheck::AdmissibleAction => "admissible action",
            CoveringCheck::OrbitQuiver => "orbit quiver",
            CoveringCheck::RelationLift => "relation lifting",
        }
    }
}

impl Serialize for CoveringCheck {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoveringFailure {
    pub check: CoveringCheck,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoveringReport {
    pub failures: Vec<CoveringFailure>,
    /// Vertices whose neighbourhoods were checked.
    pub interior_vertices: usize,
    /// Whether the orbit quiver comparison ran (complete coverings only).
    pub orbit_quiver_checked: bool,
}

impl CoveringReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn first_failure(&self, check: CoveringCheck) -> Option<&CoveringFailure> {
        self.failures.iter().find(|f| f.check == check)
    }
}

/// Checks that `F_{G,W}` is a covering and that the G-action is free and
/// admissible. Windowed coverings are checked on interior vertices and on
/// the part of the action that stays inside the window.
pub fn check_covering(cov: &CoveringQuiver) -> CoveringReport {
    let q = &cov.quiver;
    let base = &cov.base;
    let mut failures = Vec::new();
    let mut fail = |check, witness: &str| failures.push(CoveringFailure { check, witness: witness.to_owned() });

    let mut hit = vec![false; base.vertices.len()];
    for l in &cov.vertex_lift {
        hit[l.base] = true;
    }
    for (x, _) in hit.iter().enumerate().filter(|(_, &h)| !h) {
        fail(CoveringCheck::VertexSurjective, &base.vertices[x]);
    }

    for (i, a) in q.arrows.iter().enumerate() {
        let b = &base.arrows[cov.arrow_lift[i].base];
        if cov.vertex_lift[a.source].base != b.source || cov.vertex_lift[a.target].base != b.target {
            fail(CoveringCheck::ArrowMorphism, &a.name);
        }
    }

    let mut interior = 0;
    for v in 0..q.vertices.len() {
        if !cov.is_interior(v) {
            continue;
        }
        interior += 1;
        let x = cov.vertex_lift[v].base;
        for (check, up, down) in [
            (CoveringCheck::OutBijection, q.out_arrows(v), base.out_arrows(x)),
            (CoveringCheck::InBijection, q.in_arrows(v), base.in_arrows(x)),
        ] {
            let mut image: Vec<usize> = up.iter().map(|&i| cov.arrow_lift[i].base).collect();
            image.sort_unstable();
            if image != down {
                fail(check, &q.vertices[v]);
            }
        }
    }

    // The action, read through the layer structure only.
    let layers = cov.layer_index();
    let vertex_at = cov.vertex_index();
    let arrow_at = cov.arrow_index();
    let act_v = |v: usize, c: &GroupElement| {
        let l = cov.vertex_lift[v];
        cov.shift(l.layer, c, &layers).and_then(|layer| vertex_at.get(&Lift { base: l.base, layer }).copied())
    };
    let act_a = |i: usize, c: &GroupElement| {
        let l = cov.arrow_lift[i];
        cov.shift(l.layer, c, &layers).and_then(|layer| arrow_at.get(&Lift { base: l.base, layer }).copied())
    };
    let nontrivial: Vec<&GroupElement> = cov.layers.iter().filter(|c| !cov.group.is_identity(c)).collect();
    for &c in &nontrivial {
        for v in 0..q.vertices.len() {
            if let Some(u) = act_v(v, c) {
                if u == v {
                    fail(CoveringCheck::FreeAction, &q.vertices[v]);
                }
                if cov.vertex_lift[u].base != cov.vertex_lift[v].base {
                    fail(CoveringCheck::ActionAutomorphism, &q.vertices[v]);
                }
            }
        }
        for (i, a) in q.arrows.iter().enumerate() {
            let Some(j) = act_a(i, c) else { continue };
            let (s, t) = (act_v(a.source, c), act_v(a.target, c));
            if s != Some(q.arrows[j].source) || t != Some(q.arrows[j].target) {
                fail(CoveringCheck::ActionAutomorphism, &a.name);
            }
        }
    }

    // Arrow orbits under the action, as union-find classes.
    let mut parent: Vec<usize> = (0..q.arrows.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for c in &cov.layers {
        for i in 0..q.arrows.len() {
            if let Some(j) = act_a(i, c) {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                parent[ri] = rj;
            }
        }
    }
    let orbit: Vec<usize> = (0..q.arrows.len()).map(|i| find(&mut parent, i)).collect();
    for v in 0..q.vertices.len() {
        for set in [q.out_arrows(v), q.in_arrows(v)] {
            let distinct: BTreeSet<usize> = set.iter().map(|&i| orbit[i]).collect();
            if distinct.len() != set.len() {
                fail(CoveringCheck::AdmissibleAction, &q.vertices[v]);
            }
        }
    }

    let orbit_quiver_checked = cov.complete;
    if cov.complete {
        // Q/G: vertex orbits and arrow orbits, compared with the base via F.
        let mut vorbit: Vec<usize> = (0..q.vertices.len()).collect();
        for c in &cov.layers {
            for v in 0..q.vertices.len() {
                if let Some(u) = act_v(v, c) {
                    vorbit[v] = vorbit[v].min(u);
                }
            }
        }
        let vclasses: BTreeSet<usize> = vorbit.iter().copied().collect();
        let aclasses: BTreeSet<usize> = orbit.iter().copied().collect();
        let vimage: BTreeSet<usize> = vclasses.iter().map(|&v| cov.vertex_lift[v].base).collect();
        let aimage: BTreeSet<usize> = aclasses.iter().map(|&i| cov.arrow_lift[i].base).collect();
        if vclasses.len() != base.vertices.len() || vimage.len() != base.vertices.len() {
            fail(CoveringCheck::OrbitQuiver, "vertex orbits");
        }
        if aclasses.len() != base.arrows.len() || aimage.len() != base.arrows.len() {
            fail(CoveringCheck::OrbitQuiver, "arrow orbits");
        }
        for &i in &aclasses {
            let a = &q.arrows[i];
            let b = &base.arrows[cov.arrow_lift[i].base];
            if cov.vertex_lift[vorbit[a.source]].base != b.source
                || cov.vertex_lift[vorbit[a.target]].base != b.target
            {
                fail(CoveringCheck::OrbitQuiver, &a.name);
            }
        }
        if q.relations.len() != base.relations.len() * cov.layers.len() {
            fail(CoveringCheck::RelationLift, "relation count");
        }
    }
    for (rel, lift) in q.relations.iter().zip(&cov.relation_lift) {
        let b = &base.relations[lift.base];
        let projected: Vec<(i64, Vec<usize>)> = rel
            .terms
            .iter()
            .map(|(c, p)| (*c, p.arrows().iter().map(|&i| cov.arrow_lift[i].base).collect()))
            .collect();
        let expected: Vec<(i64, Vec<usize>)> = b.terms.iter().map(|(c, p)| (*c, p.0.clone())).collect();
        if projected != expected {
            fail(CoveringCheck::RelationLift, &q.display_relation(rel));
        }
    }

    CoveringReport { failures, interior_vertices: interior, orbit_quiver_checked }
}

/// Outcome of comparing `bound_quiver(B_W)` with `smash_quiver(bound_quiver(B), W)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremCheck {
    pub mismatches: Vec<String>,
    /// Number of group elements whose layers were compared.
    pub layers: usize,
    pub vertices: usize,
    pub arrows: usize,
    pub relations: usize,
}

impl TheoremCheck {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Builds both sides and compares them under `(⟨τ⟩e)^{(g)} ↦ ⟨τ_W⟩e_g`,
/// `α_e^{(g)} ↦ α_{e_g}`. For an infinite group `depth` sets the window of
/// `B_W`, and the comparison runs over the layers `E × {g}` it contains in
/// full.
pub fn cross_validate_theorem(b: &BrauerPermutation, w: &GWeight, depth: Option<usize>) -> Result<TheoremCheck> {
    let bw = smash_brauer(b, w, depth)?;
    let base = b.bound_quiver();

    let layers = bw.full_layers(b);
    let index: HashMap<&CoveredHalfEdge, usize> = bw.covered.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let window = if bw.is_complete() && w.group().is_finite() { None } else { Some(layers.as_slice()) };
    let cov = smash_quiver(&base, &w.to_arrow_weight(), window)?;

    let parts = brauer_quiver_parts(&bw.names, &bw.sigma, |i| bw.tau[i], |i| bw.multiplicity[i]);
    let mut vertex_of_half = vec![None; bw.len()];
    for (k, &(i, j)) in parts.vertex_half_edges.iter().enumerate() {
        vertex_of_half[i] = Some(k);
        vertex_of_half[j] = Some(k);
    }
    let mut arrow_of_half = vec![None; bw.len()];
    for (k, &i) in parts.arrow_half_edges.iter().enumerate() {
        arrow_of_half[i] = Some(k);
    }
    let tau_orbits = b.tau_orbits();
    let covered = |e: HalfEdge, layer: usize| index.get(&CoveredHalfEdge { base: e, g: cov.layers[layer].clone() }).copied();

    let mut mismatches = Vec::new();
    let mut vmap = Vec::with_capacity(cov.vertex_lift.len());
    for (v, l) in cov.vertex_lift.iter().enumerate() {
        let e = tau_orbits[l.base][0];
        match covered(e, l.layer).and_then(|i| vertex_of_half[i]) {
            Some(k) => vmap.push(k),
            None => {
                mismatches.push(format!("vertex {} has no counterpart", cov.quiver.vertices[v]));
                vmap.push(usize::MAX);
            }
        }
    }
    let mut amap = Vec::with_capacity(cov.arrow_lift.len());
    for (i, l) in cov.arrow_lift.iter().enumerate() {
        match covered(HalfEdge(l.base), l.layer).and_then(|h| arrow_of_half[h]) {
            Some(k) => amap.push(k),
            None => {
                mismatches.push(format!("arrow {} has no counterpart", cov.quiver.arrows[i].name));
                amap.push(usize::MAX);
            }
        }
    }
    if !mismatches.is_empty() {
        return Ok(TheoremCheck { mismatches, layers: cov.layers.len(), vertices: 0, arrows: 0, relations: 0 });
    }

    let keep: BTreeSet<usize> = vmap.iter().copied().collect();
    if keep.len() != vmap.len() {
        mismatches.push("vertex renaming is not injective".into());
    }
    if window.is_none() && keep.len() != parts.quiver.vertices.len() {
        mismatches.push(format!(
            "{} vertices on the smash side, {} in the quiver of B_W",
            keep.len(),
            parts.quiver.vertices.len()
        ));
    }
    // Renumber the B_W side onto the kept vertices.
    let target = parts.quiver.restricted_to(&keep);
    let vpos: HashMap<usize, usize> = keep.iter().enumerate().map(|(k, &v)| (v, k)).collect();
    let apos: HashMap<&str, usize> = target.arrows.iter().enumerate().map(|(k, a)| (a.name.as_str(), k)).collect();
    let mut arrow_image = Vec::with_capacity(amap.len());
    for (i, &k) in amap.iter().enumerate() {
        let name = &parts.quiver.arrows[k].name;
        let a = &cov.quiver.arrows[i];
        match apos.get(name.as_str()) {
            Some(&j) => {
                let t = &target.arrows[j];
                if vpos[&vmap[a.source]] != t.source || vpos[&vmap[a.target]] != t.target {
                    mismatches.push(format!("arrow {} maps to {} with other endpoints", a.name, t.name));
                }
                arrow_image.push(j);
            }
            None => {
                mismatches.push(format!("arrow {} maps outside the compared region", a.name));
                arrow_image.push(usize::MAX);
            }
        }
    }
    let hit: BTreeSet<usize> = arrow_image.iter().copied().collect();
    if hit.len() != target.arrows.len() || arrow_image.len() != target.arrows.len() {
        let missed = (0..target.arrows.len()).find(|j| !hit.contains(j));
        mismatches.push(match missed {
            Some(j) => format!("arrow {} of B_W has no preimage", target.arrows[j].name),
            None => "arrow renaming is not injective".into(),
        });
    }

    if mismatches.is_empty() {
        let renamed: Vec<Relation> = cov
            .quiver
            .relations
            .iter()
            .map(|r| Relation {
                terms: r.terms.iter().map(|(c, p)| (*c, Path(p.arrows().iter().map(|&i| arrow_image[i]).collect()))).collect(),
            })
            .collect();
        let mut lhs: Vec<Relation> = renamed.iter().map(Relation::normalized).collect();
        let mut rhs: Vec<Relation> = target.relations.iter().map(Relation::normalized).collect();
        lhs.sort();
        rhs.sort();
        if lhs != rhs {
            let only_lhs = lhs.iter().find(|r| !rhs.contains(r));
            let only_rhs = rhs.iter().find(|r| !lhs.contains(r));
            mismatches.push(match (only_lhs, only_rhs) {
                (Some(r), _) => format!("lifted relation {} is not a relation of B_W", target.display_relation(r)),
                (None, Some(r)) => format!("relation {} of B_W is not lifted", target.display_relation(r)),
                (None, None) => format!("relation counts differ: {} lifted, {} in B_W", lhs.len(), rhs.len()),
            });
        }
    }

    Ok(TheoremCheck {
        mismatches,
        layers: cov.layers.len(),
        vertices: target.vertices.len(),
        arrows: target.arrows.len(),
        relations: target.relations.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::QuiverData;

    fn fix1() -> BrauerPermutation {
        BrauerPermutation::from_cycles(
            &[&["1+", "1-", "2+"], &["2-"]],
            &[("1+", "1-"), ("2+", "2-")],
            &[("2-", 2)],
        )
        .unwrap()
    }

    fn s3_weight() -> GWeight {
        let s3 = GroupSpec::permutation(3, vec![("a".into(), vec![1, 2, 0]), ("b".into(), vec![1, 0, 2])])
            .unwrap();
        GWeight::from_words(s3, &[("1+", "a"), ("1-", "a"), ("2+", "a"), ("2-", "b")]).unwrap()
    }

    #[test]
    fn s3_covering_counts() {
        let cov = smash_quiver(&fix1().bound_quiver(), &s3_weight().to_arrow_weight(), None).unwrap();
        assert!(cov.complete);
        assert_eq!(cov.quiver.vertices.len(), 12);
        assert_eq!(cov.quiver.arrows.len(), 24);
        assert_eq!(cov.quiver.relations.len(), 36);
        let report = check_covering(&cov);
        assert!(report.passed(), "{:?}", report.failures);
        assert!(report.orbit_quiver_checked);
    }

    #[test]
    fn deleted_arrow_is_caught() {
        let cov = smash_quiver(&fix1().bound_quiver(), &s3_weight().to_arrow_weight(), None).unwrap();
        let broken = cov.without_arrow(5);
        let report = check_covering(&broken);
        let source = &cov.quiver.vertices[cov.quiver.arrows[5].source];
        assert_eq!(report.first_failure(CoveringCheck::OutBijection).unwrap().witness, *source);
    }

    #[test]
    fn trivial_group_is_a_copy() {
        let q = fix1().bound_quiver();
        let cov = smash_quiver(&q, &GWeight::identity(GroupSpec::trivial()), None).unwrap();
        assert_eq!(cov.quiver.vertices, ["1@1", "2@1"]);
        assert_eq!(cov.quiver.arrows.len(), q.arrows.len());
        assert!(check_covering(&cov).passed());
        assert!(cross_validate_theorem(&fix1(), &GWeight::identity(GroupSpec::trivial()), None).unwrap().passed());
    }

    #[test]
    fn theorem_on_s3_example() {
        let check = cross_validate_theorem(&fix1(), &s3_weight(), None).unwrap();
        assert!(check.passed(), "{:?}", check.mismatches);
        assert_eq!((check.vertices, check.arrows, check.relations), (12, 24, 36));
    }

    #[test]
    fn non_homogeneous_is_refused() {
        let z = GroupSpec::infinite_cyclic("a").unwrap();
        let w = GWeight::from_words(z, &[("alpha_2-", "a")]).unwrap();
        let err = smash_quiver(&fix1().bound_quiver(), &w, Some(&[])).unwrap_err();
        assert!(matches!(err, Error::NotHomogeneous { .. }));
    }

    #[test]
    fn action_composes_and_commutes_with_projection() {
        let cov = smash_quiver(&fix1().bound_quiver(), &s3_weight().to_arrow_weight(), None).unwrap();
        let g = &cov.group;
        for c in &cov.layers {
            for d in &cov.layers {
                for v in 0..cov.quiver.vertices.len() {
                    let two = cov.act_vertex(cov.act_vertex(v, c).unwrap(), d).unwrap();
                    assert_eq!(two, cov.act_vertex(v, &g.multiply(c, d).unwrap()).unwrap());
                    assert_eq!(cov.vertex_lift[two].base, cov.vertex_lift[v].base);
                }
                for i in 0..cov.quiver.arrows.len() {
                    let two = cov.act_arrow(cov.act_arrow(i, c).unwrap(), d).unwrap();
                    assert_eq!(two, cov.act_arrow(i, &g.multiply(c, d).unwrap()).unwrap());
                }
            }
        }
    }

    #[test]
    fn windowed_br1() {
        let data: QuiverData = serde_json::from_str(
            r#"{"vertices":["1","2","3"],
                "arrows":[{"name":"alpha1","source":"1","target":"2"},
                          {"name":"alpha2","source":"2","target":"1"},
                          {"name":"beta1","source":"1","target":"3"},
                          {"name":"beta2","source":"3","target":"1"}],
                "relations":[[[1,["alpha1","alpha2"]],[-1,["beta1","beta2"]]],
                             [[1,["alpha2","beta1"]]],[[1,["beta2","alpha1"]]],
                             [[1,["alpha2","alpha1","alpha2"]]],[[1,["beta2","beta1","beta2"]]]]}"#,
        )
        .unwrap();
        let q = BoundQuiver::from_data(&data).unwrap();
        let z = GroupSpec::infinite_cyclic("a").unwrap();
        let w = GWeight::from_words(z.clone(), &[("alpha2", "a"), ("beta2", "a")]).unwrap();
        let window: Vec<GroupElement> = ["a^-1", "1", "a"].iter().map(|s| z.parse_word(s).unwrap()).collect();
        assert_eq!(smash_quiver(&q, &w, None), Err(Error::WindowRequired));
        let cov = smash_quiver(&q, &w, Some(&window)).unwrap();
        assert!(!cov.complete);
        assert_eq!(cov.quiver.vertices.len(), 9);
        assert_eq!(cov.quiver.arrows.len(), 10);
        assert_eq!(cov.boundary.len(), 2);
        assert!(check_covering(&cov).passed());
    }
}
