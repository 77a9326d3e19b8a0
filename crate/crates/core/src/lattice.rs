//! Finite bounded lattices over dense element indices `0..m`.
//!
//! A lattice can arrive in three shapes: a covering relation (the Hasse
//! diagram edges), a poset (the full `<=` table) or an algebra (meet and join
//! tables). All three share the same index space, and [`cover_to_poset`] and
//! [`poset_to_algebra`] convert between them. Everything downstream works on
//! the algebraic [`Lattice`].

use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

/// Index of a lattice element.
pub type Elem = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("lattice must have at least one element")]
    Empty,
    #[error("element index {index} out of range for a lattice of {m} elements")]
    IndexOutOfRange { index: usize, m: usize },
    #[error("reflexive pair ({0}, {0}) in covering relation")]
    ReflexivePair(Elem),
    #[error("covering relation contains a cycle through element {0}")]
    CycleDetected(Elem),
    #[error("cover ({from}, {to}) is implied by a longer path")]
    RedundantCover { from: Elem, to: Elem },
    #[error("order is not reflexive at element {0}")]
    NotReflexive(Elem),
    #[error("order is not antisymmetric: {0} <= {1} and {1} <= {0}")]
    NotAntisymmetric(Elem, Elem),
    #[error("order is not transitive: {0} <= {1} <= {2} but not {0} <= {2}")]
    NotTransitive(Elem, Elem, Elem),
    #[error("not a lattice: elements {0} and {1} have no unique {2}")]
    NotALattice(Elem, Elem, &'static str),
    #[error("order has no {0} element")]
    Unbounded(&'static str),
    #[error("operation table has wrong shape: expected {expected} entries, found {found}")]
    TableShape { expected: usize, found: usize },
    #[error("algebra law violated: {0}")]
    LawViolated(String),
    #[error("tuple length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("tuples belong to different lattices")]
    LatticeMismatch,
}

fn check_index(index: usize, m: usize) -> Result<(), LatticeError> {
    if index < m {
        Ok(())
    } else {
        Err(LatticeError::IndexOutOfRange { index, m })
    }
}

/// Immediate-successor relation `i ≺ j` of a finite poset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverRelation {
    m: usize,
    covers: BTreeSet<(Elem, Elem)>,
}

impl CoverRelation {
    /// Validates a list of cover pairs: indices in range, no reflexive
    /// pairs, acyclic, and every pair immediate.
    pub fn new(m: usize, pairs: &[(Elem, Elem)]) -> Result<Self, LatticeError> {
        if m == 0 {
            return Err(LatticeError::Empty);
        }
        let mut covers = BTreeSet::new();
        for &(i, j) in pairs {
            check_index(i, m)?;
            check_index(j, m)?;
            if i == j {
                return Err(LatticeError::ReflexivePair(i));
            }
            covers.insert((i, j));
        }
        let mut succ = vec![Vec::new(); m];
        for &(i, j) in &covers {
            succ[i].push(j);
        }
        if let Some(v) = find_cycle(&succ) {
            return Err(LatticeError::CycleDetected(v));
        }
        // (i, j) is redundant when j is reachable from i without using (i, j).
        for &(i, j) in &covers {
            let mut seen = vec![false; m];
            let mut queue: VecDeque<Elem> = succ[i].iter().copied().filter(|&k| k != j).collect();
            for &k in &queue {
                seen[k] = true;
            }
            while let Some(u) = queue.pop_front() {
                if u == j {
                    return Err(LatticeError::RedundantCover { from: i, to: j });
                }
                for &w in &succ[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        Ok(CoverRelation { m, covers })
    }

    pub fn element_count(&self) -> usize {
        self.m
    }

    pub fn covers(&self) -> impl Iterator<Item = (Elem, Elem)> + '_ {
        self.covers.iter().copied()
    }
}

/// Returns some vertex on a directed cycle, if one exists.
fn find_cycle(succ: &[Vec<usize>]) -> Option<usize> {
    // Kahn's algorithm: whatever never reaches indegree zero sits on or behind a cycle.
    let n = succ.len();
    let mut indeg = vec![0usize; n];
    for out in succ {
        for &w in out {
            indeg[w] += 1;
        }
    }
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut removed = vec![false; n];
    while let Some(v) = queue.pop_front() {
        removed[v] = true;
        for &w in &succ[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                queue.push_back(w);
            }
        }
    }
    (0..n).find(|&v| !removed[v])
}

/// A partial order given as a full `m × m` Boolean table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    m: usize,
    leq: Vec<bool>,
}

impl Poset {
    /// Checks reflexivity, antisymmetry and transitivity of a row-major table.
    pub fn from_table(m: usize, leq: Vec<bool>) -> Result<Self, LatticeError> {
        if m == 0 {
            return Err(LatticeError::Empty);
        }
        if leq.len() != m * m {
            return Err(LatticeError::TableShape {
                expected: m * m,
                found: leq.len(),
            });
        }
        let at = |i: usize, j: usize| leq[i * m + j];
        for i in 0..m {
            if !at(i, i) {
                return Err(LatticeError::NotReflexive(i));
            }
        }
        for i in 0..m {
            for j in (i + 1)..m {
                if at(i, j) && at(j, i) {
                    return Err(LatticeError::NotAntisymmetric(i, j));
                }
            }
        }
        for i in 0..m {
            for j in 0..m {
                if !at(i, j) {
                    continue;
                }
                for k in 0..m {
                    if at(j, k) && !at(i, k) {
                        return Err(LatticeError::NotTransitive(i, j, k));
                    }
                }
            }
        }
        Ok(Poset { m, leq })
    }

    /// Builds the reflexive-transitive closure of the given `i <= j` pairs.
    pub fn from_pairs(m: usize, pairs: &[(Elem, Elem)]) -> Result<Self, LatticeError> {
        if m == 0 {
            return Err(LatticeError::Empty);
        }
        let mut leq = vec![false; m * m];
        for i in 0..m {
            leq[i * m + i] = true;
        }
        for &(i, j) in pairs {
            check_index(i, m)?;
            check_index(j, m)?;
            leq[i * m + j] = true;
        }
        // Warshall.
        for k in 0..m {
            for i in 0..m {
                if leq[i * m + k] {
                    for j in 0..m {
                        if leq[k * m + j] {
                            leq[i * m + j] = true;
                        }
                    }
                }
            }
        }
        Poset::from_table(m, leq)
    }

    pub fn element_count(&self) -> usize {
        self.m
    }

    pub fn leq(&self, i: Elem, j: Elem) -> bool {
        self.leq[i * self.m + j]
    }

    /// All pairs `(i, j)` with `i <= j`, `i != j`.
    pub fn strict_pairs(&self) -> Vec<(Elem, Elem)> {
        let mut out = Vec::new();
        for i in 0..self.m {
            for j in 0..self.m {
                if i != j && self.leq(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// The covering relation of this order (its Hasse diagram).
    pub fn to_cover(&self) -> CoverRelation {
        let m = self.m;
        let mut pairs = Vec::new();
        for (i, j) in self.strict_pairs() {
            let mediated = (0..m).any(|k| k != i && k != j && self.leq(i, k) && self.leq(k, j));
            if !mediated {
                pairs.push((i, j));
            }
        }
        CoverRelation {
            m,
            covers: pairs.into_iter().collect(),
        }
    }
}

/// Reflexive reachability over the cover digraph.
pub fn cover_to_poset(cover: &CoverRelation) -> Poset {
    let m = cover.m;
    let mut succ = vec![Vec::new(); m];
    for (i, j) in cover.covers() {
        succ[i].push(j);
    }
    let mut leq = vec![false; m * m];
    for i in 0..m {
        let row = &mut leq[i * m..(i + 1) * m];
        row[i] = true;
        let mut queue = VecDeque::from([i]);
        while let Some(u) = queue.pop_front() {
            for &w in &succ[u] {
                if !row[w] {
                    row[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    Poset { m, leq }
}

/// Computes meet and join tables from a poset.
///
/// Each join starts at top and is lowered whenever a common upper bound sits
/// below the current candidate; meets are raised symmetrically from bottom.
/// The result is then checked: every join must be below every common upper
/// bound and every meet above every common lower bound, otherwise the pair
/// has no unique bound and the poset is rejected.
pub fn poset_to_algebra(poset: &Poset) -> Result<Lattice, LatticeError> {
    let m = poset.m;
    let leq = |i: usize, j: usize| poset.leq(i, j);
    let bottom = (0..m).find(|&b| (0..m).all(|x| leq(b, x)));
    let top = (0..m).find(|&t| (0..m).all(|x| leq(x, t)));

    let mut join = vec![top.unwrap_or(0); m * m];
    let mut meet = vec![bottom.unwrap_or(0); m * m];
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                if leq(i, k) && leq(j, k) && leq(k, join[i * m + j]) {
                    join[i * m + j] = k;
                }
                if leq(k, i) && leq(k, j) && leq(meet[i * m + j], k) {
                    meet[i * m + j] = k;
                }
            }
        }
    }
    for i in 0..m {
        for j in 0..m {
            let (jn, mt) = (join[i * m + j], meet[i * m + j]);
            if !(leq(i, jn) && leq(j, jn)) {
                return Err(LatticeError::NotALattice(i, j, "join"));
            }
            if !(leq(mt, i) && leq(mt, j)) {
                return Err(LatticeError::NotALattice(i, j, "meet"));
            }
            for k in 0..m {
                if leq(i, k) && leq(j, k) && !leq(jn, k) {
                    return Err(LatticeError::NotALattice(i, j, "join"));
                }
                if leq(k, i) && leq(k, j) && !leq(k, mt) {
                    return Err(LatticeError::NotALattice(i, j, "meet"));
                }
            }
        }
    }
    // A finite poset with all binary bounds is bounded, so these only guard the invariant.
    let bottom = bottom.ok_or(LatticeError::Unbounded("bottom"))?;
    let top = top.ok_or(LatticeError::Unbounded("top"))?;
    Ok(Lattice {
        m,
        meet,
        join,
        bottom,
        top,
        leq: poset.leq.clone(),
        names: None,
    })
}

/// A finite bounded lattice in algebraic form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    m: usize,
    meet: Vec<Elem>,
    join: Vec<Elem>,
    bottom: Elem,
    top: Elem,
    leq: Vec<bool>,
    names: Option<Vec<String>>,
}

impl Lattice {
    /// Validates row-major meet and join tables against the lattice laws.
    pub fn from_tables(m: usize, meet: Vec<Elem>, join: Vec<Elem>) -> Result<Self, LatticeError> {
        if m == 0 {
            return Err(LatticeError::Empty);
        }
        for table in [&meet, &join] {
            if table.len() != m * m {
                return Err(LatticeError::TableShape {
                    expected: m * m,
                    found: table.len(),
                });
            }
            for &v in table {
                check_index(v, m)?;
            }
        }
        let mt = |a: usize, b: usize| meet[a * m + b];
        let jn = |a: usize, b: usize| join[a * m + b];
        let law = |what: String| Err(LatticeError::LawViolated(what));
        for a in 0..m {
            if mt(a, a) != a || jn(a, a) != a {
                return law(format!("idempotence at {a}"));
            }
            for b in 0..m {
                if mt(a, b) != mt(b, a) || jn(a, b) != jn(b, a) {
                    return law(format!("commutativity at ({a}, {b})"));
                }
                if mt(a, jn(a, b)) != a || jn(a, mt(a, b)) != a {
                    return law(format!("absorption at ({a}, {b})"));
                }
                for c in 0..m {
                    if mt(mt(a, b), c) != mt(a, mt(b, c)) || jn(jn(a, b), c) != jn(a, jn(b, c)) {
                        return law(format!("associativity at ({a}, {b}, {c})"));
                    }
                }
            }
        }
        let mut leq = vec![false; m * m];
        for a in 0..m {
            for b in 0..m {
                leq[a * m + b] = mt(a, b) == a;
            }
        }
        let bottom = (0..m)
            .find(|&x| (0..m).all(|y| leq[x * m + y]))
            .ok_or(LatticeError::Unbounded("bottom"))?;
        let top = (0..m)
            .find(|&x| (0..m).all(|y| leq[y * m + x]))
            .ok_or(LatticeError::Unbounded("top"))?;
        Ok(Lattice {
            m,
            meet,
            join,
            bottom,
            top,
            leq,
            names: None,
        })
    }

    /// The chain `0 < 1 < ... < m-1`.
    pub fn chain(m: usize) -> Self {
        assert!(m > 0, "chain needs at least one element");
        let mut meet = Vec::with_capacity(m * m);
        let mut join = Vec::with_capacity(m * m);
        for a in 0..m {
            for b in 0..m {
                meet.push(a.min(b));
                join.push(a.max(b));
            }
        }
        Lattice::from_tables(m, meet, join).expect("chain is a lattice")
    }

    /// The four-element diamond `0 < 1, 2 < 3` with incomparable middles.
    pub fn diamond() -> Self {
        let cover = CoverRelation::new(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).expect("valid cover");
        poset_to_algebra(&cover_to_poset(&cover))
            .expect("diamond is a lattice")
            .with_names(["bot", "a", "b", "top"])
    }

    /// Subsets of a `bits`-element universe as bitmasks, ordered by inclusion.
    /// Meet is intersection.
    pub fn powerset(bits: u32) -> Self {
        Self::bitmask_lattice(bits, false)
    }

    /// Subsets ordered by reverse inclusion: meet is union, top is the empty set.
    pub fn powerset_reversed(bits: u32) -> Self {
        Self::bitmask_lattice(bits, true)
    }

    fn bitmask_lattice(bits: u32, reversed: bool) -> Self {
        assert!(bits < 16, "universe too large to tabulate");
        let m = 1usize << bits;
        let mut meet = Vec::with_capacity(m * m);
        let mut join = Vec::with_capacity(m * m);
        for a in 0..m {
            for b in 0..m {
                if reversed {
                    meet.push(a | b);
                    join.push(a & b);
                } else {
                    meet.push(a & b);
                    join.push(a | b);
                }
            }
        }
        Lattice::from_tables(m, meet, join).expect("powerset is a lattice")
    }

    pub fn with_names<S: Into<String>>(mut self, names: impl IntoIterator<Item = S>) -> Self {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        assert_eq!(names.len(), self.m, "one name per element");
        self.names = Some(names);
        self
    }

    pub fn set_names(&mut self, names: Option<Vec<String>>) {
        if let Some(n) = &names {
            assert_eq!(n.len(), self.m, "one name per element");
        }
        self.names = names;
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Display name of an element, falling back to `l{index}`.
    pub fn name(&self, e: Elem) -> String {
        match &self.names {
            Some(n) => n[e].clone(),
            None => format!("l{e}"),
        }
    }

    pub fn element_count(&self) -> usize {
        self.m
    }

    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    pub fn meet_table(&self) -> &[Elem] {
        &self.meet
    }

    pub fn join_table(&self) -> &[Elem] {
        &self.join
    }

    /// Table lookup; panics on out-of-range indices. See [`Lattice::checked_meet`].
    #[inline]
    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.meet[a * self.m + b]
    }

    #[inline]
    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.join[a * self.m + b]
    }

    #[inline]
    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.leq[a * self.m + b]
    }

    pub fn checked_meet(&self, a: Elem, b: Elem) -> Result<Elem, LatticeError> {
        check_index(a, self.m)?;
        check_index(b, self.m)?;
        Ok(self.meet(a, b))
    }

    pub fn checked_join(&self, a: Elem, b: Elem) -> Result<Elem, LatticeError> {
        check_index(a, self.m)?;
        check_index(b, self.m)?;
        Ok(self.join(a, b))
    }

    /// Meet of a finite set of elements; the empty meet is top.
    pub fn meet_of_set<I>(&self, elems: I) -> Result<Elem, LatticeError>
    where
        I: IntoIterator<Item = Elem>,
    {
        elems.into_iter().try_fold(self.top, |acc, e| {
            check_index(e, self.m)?;
            Ok(self.meet(acc, e))
        })
    }

    /// Length in edges of the longest chain from bottom to top.
    pub fn height(&self) -> usize {
        let m = self.m;
        // Process elements by number of strict lower bounds, a linear extension.
        let mut order: Vec<Elem> = (0..m).collect();
        order.sort_by_key(|&x| (0..m).filter(|&y| self.leq(y, x)).count());
        let mut depth = vec![0usize; m];
        for &x in &order {
            for y in 0..m {
                if y != x && self.leq(y, x) {
                    depth[x] = depth[x].max(depth[y] + 1);
                }
            }
        }
        depth[self.top]
    }

    /// The order derived from the meet table (`x <= y` iff `x ∧ y = x`).
    pub fn to_poset(&self) -> Poset {
        Poset {
            m: self.m,
            leq: self.leq.clone(),
        }
    }

    pub fn to_cover(&self) -> CoverRelation {
        self.to_poset().to_cover()
    }

    pub fn tuple(&self, values: Vec<Elem>) -> Result<TupleValue<'_>, LatticeError> {
        for &v in &values {
            check_index(v, self.m)?;
        }
        Ok(TupleValue {
            lattice: self,
            values,
        })
    }

    /// `top` repeated `n` times.
    pub fn top_tuple(&self, n: usize) -> TupleValue<'_> {
        TupleValue {
            lattice: self,
            values: vec![self.top; n],
        }
    }

    pub fn bottom_tuple(&self, n: usize) -> TupleValue<'_> {
        TupleValue {
            lattice: self,
            values: vec![self.bottom; n],
        }
    }

    /// Componentwise `<=` on raw index slices of equal length.
    pub fn slice_leq(&self, a: &[Elem], b: &[Elem]) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(&x, &y)| self.leq(x, y))
    }
}

/// An element of `Lⁿ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TupleValue<'l> {
    lattice: &'l Lattice,
    values: Vec<Elem>,
}

impl<'l> TupleValue<'l> {
    pub fn values(&self) -> &[Elem] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Elem> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    fn compatible(&self, other: &Self) -> Result<(), LatticeError> {
        if !std::ptr::eq(self.lattice, other.lattice) && self.lattice != other.lattice {
            return Err(LatticeError::LatticeMismatch);
        }
        if self.values.len() != other.values.len() {
            return Err(LatticeError::LengthMismatch(
                self.values.len(),
                other.values.len(),
            ));
        }
        Ok(())
    }

    /// Componentwise meet.
    pub fn meet(&self, other: &Self) -> Result<TupleValue<'l>, LatticeError> {
        self.compatible(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| self.lattice.meet(a, b))
            .collect();
        Ok(TupleValue {
            lattice: self.lattice,
            values,
        })
    }

    pub fn leq(&self, other: &Self) -> Result<bool, LatticeError> {
        self.compatible(other)?;
        Ok(self.lattice.slice_leq(&self.values, &other.values))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond_poset() -> Poset {
        cover_to_poset(&CoverRelation::new(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap())
    }

    #[test]
    fn cover_validation() {
        let chain = CoverRelation::new(2, &[(0, 1)]).unwrap();
        assert_eq!(chain.covers().collect::<Vec<_>>(), vec![(0, 1)]);
        assert!(matches!(
            CoverRelation::new(2, &[(0, 1), (1, 0)]),
            Err(LatticeError::CycleDetected(_))
        ));
        assert_eq!(
            CoverRelation::new(3, &[(0, 1), (1, 2), (0, 2)]),
            Err(LatticeError::RedundantCover { from: 0, to: 2 })
        );
        assert_eq!(
            CoverRelation::new(2, &[(1, 1)]),
            Err(LatticeError::ReflexivePair(1))
        );
        assert_eq!(
            CoverRelation::new(2, &[(0, 2)]),
            Err(LatticeError::IndexOutOfRange { index: 2, m: 2 })
        );
        assert_eq!(CoverRelation::new(0, &[]), Err(LatticeError::Empty));
    }

    #[test]
    fn cover_to_poset_examples() {
        let p = cover_to_poset(&CoverRelation::new(2, &[(0, 1)]).unwrap());
        assert!(p.leq(0, 1));
        assert!(!p.leq(1, 0));
        let d = diamond_poset();
        for i in 0..4 {
            assert!(d.leq(i, i));
        }
        assert!(!d.leq(1, 2));
        assert!(d.leq(0, 3));
    }

    #[test]
    fn poset_to_algebra_examples() {
        let d = poset_to_algebra(&diamond_poset()).unwrap();
        assert_eq!(d.meet(1, 2), 0);
        assert_eq!(d.join(1, 2), 3);
        assert_eq!((d.bottom(), d.top()), (0, 3));

        let c = poset_to_algebra(&Poset::from_pairs(3, &[(0, 1), (1, 2)]).unwrap()).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(c.meet(a, b), a.min(b));
                assert_eq!(c.join(a, b), a.max(b));
            }
        }
    }

    #[test]
    fn n_poset_is_rejected() {
        // a=0, b=1 minimal; c=2, d=3 maximal.
        let p = Poset::from_pairs(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert!(matches!(
            poset_to_algebra(&p),
            Err(LatticeError::NotALattice(..))
        ));
        // Bounded version: the middle pairs still lack unique bounds.
        let bounded = Poset::from_pairs(
            6,
            &[
                (4, 0),
                (4, 1),
                (0, 2),
                (0, 3),
                (1, 2),
                (1, 3),
                (2, 5),
                (3, 5),
            ],
        )
        .unwrap();
        assert!(matches!(
            poset_to_algebra(&bounded),
            Err(LatticeError::NotALattice(..))
        ));
    }

    #[test]
    fn diagonal_meets_are_the_element_itself() {
        let c = Lattice::chain(2);
        assert_eq!(c.meet(1, 1), 1);
        assert_eq!(c.join(0, 0), 0);
    }

    #[test]
    fn poset_validation() {
        assert_eq!(
            Poset::from_table(2, vec![true, false, false, false]),
            Err(LatticeError::NotReflexive(1))
        );
        assert_eq!(
            Poset::from_pairs(2, &[(0, 1), (1, 0)]),
            Err(LatticeError::NotAntisymmetric(0, 1))
        );
        let bad = vec![
            true, true, false, //
            false, true, true, //
            false, false, true,
        ];
        assert_eq!(
            Poset::from_table(3, bad),
            Err(LatticeError::NotTransitive(0, 1, 2))
        );
    }

    #[test]
    fn element_operations() {
        let d = Lattice::diamond();
        for x in 0..4 {
            assert_eq!(d.meet(x, d.top()), x);
            assert_eq!(d.join(x, x), x);
        }
        assert_eq!(d.meet(1, 2), 0);
        assert_eq!(
            d.checked_meet(0, 4),
            Err(LatticeError::IndexOutOfRange { index: 4, m: 4 })
        );
        assert_eq!(d.checked_join(1, 2), Ok(3));
    }

    #[test]
    fn meet_of_set_examples() {
        let d = Lattice::diamond();
        assert_eq!(d.meet_of_set([]), Ok(d.top()));
        assert_eq!(d.meet_of_set([2]), Ok(2));
        assert_eq!(d.meet_of_set([1, 2, 3]), Ok(0));
        assert!(d.meet_of_set([9]).is_err());
    }

    #[test]
    fn tuple_operations() {
        let d = Lattice::diamond();
        let x = d.tuple(vec![1, 2, 3, 0]).unwrap();
        assert_eq!(x.meet(&x).unwrap(), x);
        assert_eq!(x.meet(&d.top_tuple(4)).unwrap(), x);
        assert!(d.bottom_tuple(4).leq(&x).unwrap());
        assert!(!x.leq(&d.bottom_tuple(4)).unwrap());
        assert_eq!(
            x.meet(&d.top_tuple(3)),
            Err(LatticeError::LengthMismatch(4, 3))
        );
        let other = Lattice::chain(4);
        assert_eq!(
            x.leq(&other.top_tuple(4)),
            Err(LatticeError::LatticeMismatch)
        );
        assert!(d.tuple(vec![4]).is_err());
    }

    #[test]
    fn heights() {
        assert_eq!(Lattice::chain(2).height(), 1);
        assert_eq!(Lattice::diamond().height(), 2);
        assert_eq!(Lattice::chain(7).height(), 6);
        assert_eq!(Lattice::chain(1).height(), 0);
        assert_eq!(Lattice::powerset(3).height(), 3);
    }

    #[test]
    fn from_tables_rejects_broken_algebra() {
        // Commutative and idempotent, but meet(0,1)=0 while join(0,1)=0 breaks absorption.
        let err = Lattice::from_tables(2, vec![0, 0, 0, 1], vec![0, 0, 0, 1]).unwrap_err();
        assert!(matches!(err, LatticeError::LawViolated(_)));
        assert!(matches!(
            Lattice::from_tables(2, vec![0, 0, 0], vec![0, 1, 1, 1]),
            Err(LatticeError::TableShape { .. })
        ));
    }

    #[test]
    fn powerset_orders() {
        let p = Lattice::powerset(2);
        assert_eq!((p.bottom(), p.top()), (0, 3));
        assert_eq!(p.meet(0b01, 0b10), 0);
        let r = Lattice::powerset_reversed(2);
        assert_eq!((r.bottom(), r.top()), (3, 0));
        assert_eq!(r.meet(0b01, 0b10), 0b11);
    }

    #[test]
    fn cover_of_derived_order_round_trips() {
        let d = Lattice::diamond();
        let back = poset_to_algebra(&cover_to_poset(&d.to_cover())).unwrap();
        assert_eq!(back.meet_table(), d.meet_table());
        assert_eq!(back.join_table(), d.join_table());
    }
}
