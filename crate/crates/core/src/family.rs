//! The family of trees grown from `P3` by repeatedly hanging a pendant `P3`
//! on a forced-zero vertex, together with a recognizer that peels such
//! pendants back off and records the construction.
//!
//! # Certificate format
//!
//! ```text
//! P3
//! 2: 3 4 5
//! 5: 6 7 8
//! ```
//!
//! The first line names the base tree, labelled `0 - 1 - 2`. Each following
//! line `u: v3 v2 v1` is one step: in the current tree on `n` vertices, `u`
//! must be a forced-zero vertex, and the path `v3 v2 v1 = n, n+1, n+2` is
//! attached by the edge `u v3`.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;
use thiserror::Error;

use crate::graph::{canonical_form, make_path, CanonicalForm, Tree, Vertex};
use crate::solver::{in_w_set, prdf_number, w_set};
use crate::stability::is_stable;

/// Largest order accepted by [`enumerate_family`].
pub const MAX_FAMILY_ORDER: usize = 18;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("vertex {u} is not forced to zero in the current tree")]
    NotInW { u: Vertex },
    #[error("vertex {v} out of range for {n} vertices")]
    VertexOutOfRange { v: Vertex, n: usize },
    #[error("family order must be a positive multiple of 3, got {0}")]
    BadOrder(usize),
    #[error("family enumeration is capped at order {max}, got {n}")]
    OrderTooLarge { n: usize, max: usize },
    #[error("certificate line {line}: {message}")]
    CertificateParse { line: usize, message: String },
    #[error("certificate step {step}: {message}")]
    InvalidStep { step: usize, message: String },
    #[error("certificate step {step}: intermediate tree is not stable")]
    UnstableIntermediate { step: usize },
    #[error("no forced-zero vertex available after {steps} steps")]
    NoWVertex { steps: usize },
}

/// One construction step, in the labels of the tree it produces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PeelStep {
    pub u: Vertex,
    pub v3: Vertex,
    pub v2: Vertex,
    pub v1: Vertex,
}

impl PeelStep {
    /// The step attaching at `u` to a tree on `n` vertices.
    pub fn at(u: Vertex, n: usize) -> Self {
        PeelStep { u, v3: n, v2: n + 1, v1: n + 2 }
    }
}

/// Forward construction sequence starting from `P3`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PeelCertificate {
    steps: Vec<PeelStep>,
}

impl PeelCertificate {
    pub fn new(steps: Vec<PeelStep>) -> Self {
        PeelCertificate { steps }
    }

    pub fn steps(&self) -> &[PeelStep] {
        &self.steps
    }

    /// Order of the tree the certificate builds.
    pub fn order(&self) -> usize {
        3 + 3 * self.steps.len()
    }

    fn push(&self, u: Vertex, n: usize) -> Self {
        let mut steps = self.steps.clone();
        steps.push(PeelStep::at(u, n));
        PeelCertificate { steps }
    }

    pub fn parse(text: &str) -> Result<Self, FamilyError> {
        let err = |line: usize, message: &str| FamilyError::CertificateParse { line, message: message.into() };
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
        match lines.next() {
            Some((_, "P3")) => {}
            Some((line, _)) => return Err(err(line, "expected base line \"P3\"")),
            None => return Err(err(1, "empty certificate")),
        }
        let mut steps = Vec::new();
        for (line, content) in lines {
            let (u, rest) = content.split_once(':').ok_or_else(|| err(line, "expected \"u: v3 v2 v1\""))?;
            let parse = |s: &str| s.trim().parse::<Vertex>().map_err(|_| err(line, &format!("bad label {s:?}")));
            let u = parse(u)?;
            let vs = rest.split_whitespace().map(parse).collect::<Result<Vec<_>, _>>()?;
            let [v3, v2, v1] = vs[..] else {
                return Err(err(line, "expected exactly three path labels"));
            };
            steps.push(PeelStep { u, v3, v2, v1 });
        }
        Ok(PeelCertificate { steps })
    }
}

impl fmt::Display for PeelCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "P3")?;
        for s in &self.steps {
            writeln!(f, "{}: {} {} {}", s.u, s.v3, s.v2, s.v1)?;
        }
        Ok(())
    }
}

/// Hangs a pendant `P3` on `u`, which must be forced to zero in `t`.
pub fn apply_o1(t: &Tree, u: Vertex) -> Result<Tree, FamilyError> {
    if u >= t.n() {
        return Err(FamilyError::VertexOutOfRange { v: u, n: t.n() });
    }
    if !in_w_set(t, u).expect("vertex in range") {
        return Err(FamilyError::NotInW { u });
    }
    Ok(t.attach_pendant_path(u, 3).expect("vertex in range"))
}

/// Rebuilds the tree, checking every step's attachment vertex and the
/// stability of every intermediate tree.
pub fn replay_certificate(c: &PeelCertificate) -> Result<Tree, FamilyError> {
    let mut tree = make_path(3).expect("P3");
    for (i, step) in c.steps.iter().enumerate() {
        let n = tree.n();
        if *step != PeelStep::at(step.u, n) {
            return Err(FamilyError::InvalidStep {
                step: i + 1,
                message: format!("path labels must be {} {} {}", n, n + 1, n + 2),
            });
        }
        tree = apply_o1(&tree, step.u).map_err(|e| FamilyError::InvalidStep { step: i + 1, message: e.to_string() })?;
        if !is_stable(&tree) {
            return Err(FamilyError::UnstableIntermediate { step: i + 1 });
        }
    }
    Ok(tree)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RejectReason {
    OrderNotMultipleOfThree,
    /// Order at least 6 but diameter below 4.
    DiameterTooSmall,
    /// The second vertex of the longest path has degree other than 2.
    SecondVertexDegree,
    /// The third vertex of the longest path has degree other than 2.
    ThirdVertexDegree,
    /// After peeling, the attachment vertex is not forced to zero.
    AttachmentNotInW,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Recognition {
    Accepted {
        certificate: PeelCertificate,
        /// `relabeling[v]` is the label vertex `v` gets in the replayed tree.
        relabeling: Vec<Vertex>,
    },
    Rejected {
        reason: RejectReason,
        /// Order of the remaining tree when rejection happened.
        at_order: usize,
    },
}

impl Recognition {
    pub fn accepted(&self) -> bool {
        matches!(self, Recognition::Accepted { .. })
    }

    pub fn certificate(&self) -> Option<&PeelCertificate> {
        match self {
            Recognition::Accepted { certificate, .. } => Some(certificate),
            Recognition::Rejected { .. } => None,
        }
    }
}

/// Decides membership by repeatedly peeling the pendant `P3` at the start of
/// the deterministic longest path.
pub fn recognize(t: &Tree) -> Recognition {
    let reject = |reason, at_order| Recognition::Rejected { reason, at_order };
    if t.n() % 3 != 0 {
        return reject(RejectReason::OrderNotMultipleOfThree, t.n());
    }

    let mut current = t.clone();
    let mut origin: Vec<Vertex> = (0..t.n()).collect();
    // (x4, x3, x2, x1) in original labels, outermost first
    let mut peeled: Vec<[Vertex; 4]> = Vec::new();
    while current.n() > 3 {
        let n = current.n();
        let path = current.longest_path();
        if path.len() < 5 {
            return reject(RejectReason::DiameterTooSmall, n);
        }
        let (x1, x2, x3, x4) = (path[0], path[1], path[2], path[3]);
        if current.degree(x2) != 2 {
            return reject(RejectReason::SecondVertexDegree, n);
        }
        if current.degree(x3) != 2 {
            return reject(RejectReason::ThirdVertexDegree, n);
        }
        let (next, keep) = current.remove_vertices_connected(&[x1, x2, x3]);
        let attach = keep.binary_search(&x4).expect("x4 survives");
        if !in_w_set(&next, attach).expect("vertex in range") {
            return reject(RejectReason::AttachmentNotInW, n);
        }
        peeled.push([origin[x4], origin[x3], origin[x2], origin[x1]]);
        origin = keep.iter().map(|&k| origin[k]).collect();
        current = next;
    }

    let center = (0..3).find(|&v| current.degree(v) == 2).expect("P3 has a center");
    let ends: Vec<Vertex> = current.neighbors(center).to_vec();
    let mut relabeling = vec![usize::MAX; t.n()];
    relabeling[origin[ends[0]]] = 0;
    relabeling[origin[center]] = 1;
    relabeling[origin[ends[1]]] = 2;
    let mut steps = Vec::with_capacity(peeled.len());
    let mut n = 3;
    for &[x4, x3, x2, x1] in peeled.iter().rev() {
        let step = PeelStep::at(relabeling[x4], n);
        relabeling[x3] = step.v3;
        relabeling[x2] = step.v2;
        relabeling[x1] = step.v1;
        steps.push(step);
        n += 3;
    }
    Recognition::Accepted { certificate: PeelCertificate { steps }, relabeling }
}

/// `n ≡ 0 (mod 3)` and `γ(T) = 2n/3`.
pub fn check_corollary(t: &Tree) -> bool {
    let n = t.n() as u64;
    n % 3 == 0 && 3 * prdf_number(t) == 2 * n
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyMember {
    pub tree: Tree,
    pub certificate: PeelCertificate,
}

/// All family members of one order, keyed by canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyIndex {
    order: usize,
    members: BTreeMap<CanonicalForm, FamilyMember>,
}

impl FamilyIndex {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, form: &CanonicalForm) -> bool {
        self.members.contains_key(form)
    }

    pub fn get(&self, form: &CanonicalForm) -> Option<&FamilyMember> {
        self.members.get(form)
    }

    /// Members in canonical-form order.
    pub fn iter(&self) -> impl Iterator<Item = (&CanonicalForm, &FamilyMember)> {
        self.members.iter()
    }
}

fn next_level(level: &BTreeMap<CanonicalForm, FamilyMember>) -> BTreeMap<CanonicalForm, FamilyMember> {
    let mut next = BTreeMap::new();
    for member in level.values() {
        let n = member.tree.n();
        for &u in w_set(&member.tree).vertices() {
            let tree = member.tree.attach_pendant_path(u, 3).expect("vertex in range");
            next.entry(canonical_form(&tree))
                .or_insert_with(|| FamilyMember { tree, certificate: member.certificate.push(u, n) });
        }
    }
    next
}

/// Closure of `{P3}` under the pendant-`P3` operation, up to isomorphism,
/// at order `n`.
pub fn enumerate_family(n: usize) -> Result<FamilyIndex, FamilyError> {
    let levels = enumerate_family_levels(n)?;
    Ok(levels.into_iter().last().expect("at least one level"))
}

/// Family members of every order `3, 6, ..., n`.
pub fn enumerate_family_levels(n: usize) -> Result<Vec<FamilyIndex>, FamilyError> {
    if n == 0 || n % 3 != 0 {
        return Err(FamilyError::BadOrder(n));
    }
    if n > MAX_FAMILY_ORDER {
        return Err(FamilyError::OrderTooLarge { n, max: MAX_FAMILY_ORDER });
    }
    let p3 = make_path(3).expect("P3");
    let mut level = BTreeMap::new();
    level.insert(canonical_form(&p3), FamilyMember { tree: p3, certificate: PeelCertificate::default() });
    let mut out = vec![FamilyIndex { order: 3, members: level.clone() }];
    for order in (6..=n).step_by(3) {
        level = next_level(&level);
        out.push(FamilyIndex { order, members: level.clone() });
    }
    Ok(out)
}

/// `steps` random construction steps from `P3`, each attaching at a
/// uniformly chosen forced-zero vertex.
pub fn random_family_tree<R: Rng + ?Sized>(steps: usize, rng: &mut R) -> Result<(Tree, PeelCertificate), FamilyError> {
    let mut tree = make_path(3).expect("P3");
    let mut certificate = PeelCertificate::default();
    for done in 0..steps {
        let w = w_set(&tree);
        if w.is_empty() {
            return Err(FamilyError::NoWVertex { steps: done });
        }
        let u = w.vertices()[rng.gen_range(0..w.len())];
        certificate = certificate.push(u, tree.n());
        tree = tree.attach_pendant_path(u, 3).expect("vertex in range");
    }
    Ok((tree, certificate))
}
