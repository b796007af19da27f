//! Finite graded bounded posets.
//!
//! A [`Poset`] is stored as a cover relation over indexed elements together
//! with its rank function and the full order relation. Element names are
//! opaque whitespace-free strings; derived posets (products, transforms,
//! intervals) build composite names deterministically, so every
//! construction is reproducible.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Poset {
    names: Vec<String>,
    index: HashMap<String, usize>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    rank: Vec<usize>,
    leq: Vec<Vec<bool>>,
    bottom: usize,
    top: usize,
}

/// Accumulates named elements and cover pairs, then validates them.
#[derive(Clone, Debug, Default)]
pub struct PosetBuilder {
    names: Vec<String>,
    index: HashMap<String, usize>,
    covers: Vec<(usize, usize)>,
}

impl PosetBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns the index of `name`, adding it if it is new.
    pub fn element(&mut self, name: impl Into<String>) -> usize {
        let name = name.into();
        if let Some(&i) = self.index.get(&name) {
            return i;
        }
        let i = self.names.len();
        self.index.insert(name.clone(), i);
        self.names.push(name);
        i
    }

    pub fn cover(&mut self, lower: usize, upper: usize) {
        self.covers.push((lower, upper));
    }

    pub fn cover_named(&mut self, lower: &str, upper: &str) {
        let l = self.element(lower);
        let u = self.element(upper);
        self.cover(l, u);
    }

    pub fn build(self) -> Result<Poset> {
        Poset::from_parts(self.names, self.index, self.covers)
    }
}

impl Poset {
    fn from_parts(
        names: Vec<String>,
        index: HashMap<String, usize>,
        mut covers: Vec<(usize, usize)>,
    ) -> Result<Poset> {
        let n = names.len();
        if n == 0 {
            return Err(Error::NotBounded("poset has no elements".into()));
        }
        covers.sort_unstable();
        covers.dedup();
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for &(l, u) in &covers {
            if l == u {
                return Err(Error::CycleDetected);
            }
            up[l].push(u);
            down[u].push(l);
        }

        let minimal: Vec<usize> = (0..n).filter(|&i| down[i].is_empty()).collect();
        let maximal: Vec<usize> = (0..n).filter(|&i| up[i].is_empty()).collect();

        // Kahn's algorithm: a leftover element means a cycle.
        let mut indeg: Vec<usize> = down.iter().map(Vec::len).collect();
        let mut queue: VecDeque<usize> = minimal.iter().copied().collect();
        let mut order = Vec::with_capacity(n);
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &y in &up[x] {
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    queue.push_back(y);
                }
            }
        }
        if order.len() != n {
            return Err(Error::CycleDetected);
        }
        if minimal.len() != 1 {
            return Err(Error::NotBounded(format!(
                "{} minimal elements",
                minimal.len()
            )));
        }
        if maximal.len() != 1 {
            return Err(Error::NotBounded(format!(
                "{} maximal elements",
                maximal.len()
            )));
        }

        // Longest chain from the bottom.
        let mut rank = vec![0usize; n];
        for &x in &order {
            for &y in &up[x] {
                rank[y] = rank[y].max(rank[x] + 1);
            }
        }
        for &(l, u) in &covers {
            if rank[u] != rank[l] + 1 {
                return Err(Error::NotGraded {
                    lower: names[l].clone(),
                    upper: names[u].clone(),
                });
            }
        }

        let mut leq = vec![vec![false; n]; n];
        for &x in order.iter().rev() {
            leq[x][x] = true;
            for &y in &up[x] {
                for z in 0..n {
                    if leq[y][z] {
                        leq[x][z] = true;
                    }
                }
            }
        }

        for v in up.iter_mut().chain(down.iter_mut()) {
            v.sort_unstable();
        }

        Ok(Poset {
            names,
            index,
            up,
            down,
            rank,
            leq,
            bottom: minimal[0],
            top: maximal[0],
        })
    }

    /// Builds from explicit names and index pairs.
    pub fn from_covers(names: Vec<String>, covers: Vec<(usize, usize)>) -> Result<Poset> {
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::BadParameter(format!("duplicate element `{name}`")));
            }
        }
        Poset::from_parts(names, index, covers)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Rank of the poset, that is, of its top element.
    pub fn rank(&self) -> usize {
        self.rank[self.top]
    }

    pub fn rank_of(&self, x: usize) -> usize {
        self.rank[x]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.up[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.down[x]
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x][y]
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq[x][y]
    }

    pub fn covers(&self, x: usize, y: usize) -> bool {
        self.up[x].binary_search(&y).is_ok()
    }

    /// Hasse diagram edges `(x, y)` with `x ≺ y`.
    pub fn hasse_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.len()).flat_map(move |x| self.up[x].iter().map(move |&y| (x, y)))
    }

    pub fn elements_of_rank(&self, r: usize) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.rank[x] == r).collect()
    }

    /// Elements sorted by rank, then name.
    pub fn sorted_elements(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.len()).collect();
        v.sort_by(|&x, &y| {
            (self.rank[x], &self.names[x]).cmp(&(self.rank[y], &self.names[y]))
        });
        v
    }

    pub fn atoms(&self) -> &[usize] {
        &self.up[self.bottom]
    }

    pub fn coatoms(&self) -> &[usize] {
        &self.down[self.top]
    }

    /// Number of elements of the closed interval `[x, y]`.
    pub fn interval_size(&self, x: usize, y: usize) -> usize {
        (0..self.len())
            .filter(|&z| self.leq[x][z] && self.leq[z][y])
            .count()
    }

    /// The closed interval `[x, y]` as a poset, keeping element names.
    pub fn interval(&self, x: usize, y: usize) -> Result<Poset> {
        if !self.leq(x, y) {
            return Err(Error::NotComparable(
                self.names[x].clone(),
                self.names[y].clone(),
            ));
        }
        let members: Vec<usize> = (0..self.len())
            .filter(|&z| self.leq[x][z] && self.leq[z][y])
            .collect();
        let mut b = PosetBuilder::new();
        for &z in &members {
            b.element(self.names[z].clone());
        }
        for &z in &members {
            for &w in &self.up[z] {
                if self.leq[w][y] {
                    b.cover_named(&self.names[z], &self.names[w]);
                }
            }
        }
        b.build()
    }

    pub fn dual(&self) -> Poset {
        let mut b = PosetBuilder::new();
        for name in &self.names {
            b.element(name.clone());
        }
        for (x, y) in self.hasse_edges() {
            b.cover(y, x);
        }
        b.build().expect("dual of a graded bounded poset")
    }

    /// Möbius values `μ(x, y)` for every `y`, zero where `x ≰ y`.
    pub fn mobius_row(&self, x: usize) -> Vec<i64> {
        let mut mu = vec![0i64; self.len()];
        let mut above: Vec<usize> = (0..self.len()).filter(|&y| self.leq[x][y]).collect();
        above.sort_by_key(|&y| self.rank[y]);
        for &y in &above {
            if y == x {
                mu[y] = 1;
                continue;
            }
            let mut s = 0i64;
            for &z in &above {
                if z != y && self.leq[z][y] {
                    s = s.checked_add(mu[z]).expect("Möbius value overflow");
                }
            }
            mu[y] = -s;
        }
        mu
    }

    pub fn mobius(&self, x: usize, y: usize) -> Result<i64> {
        if !self.leq(x, y) {
            return Err(Error::NotComparable(
                self.names[x].clone(),
                self.names[y].clone(),
            ));
        }
        Ok(self.mobius_row(x)[y])
    }

    /// Eulerian test via `μ(x, y) = (-1)^{ρ(y) - ρ(x)}` for all `x ≤ y`.
    ///
    /// This is equivalent to every interval `[x, y]`, `x < y`, having as many
    /// elements of even rank as of odd rank: that condition says exactly that
    /// `(x, y) ↦ (-1)^{ρ(y)-ρ(x)}` satisfies the defining recursion of `μ`.
    pub fn is_eulerian(&self) -> bool {
        (0..self.len()).all(|x| {
            let mu = self.mobius_row(x);
            (0..self.len()).filter(|&y| self.leq[x][y]).all(|y| {
                let d = self.rank[y] - self.rank[x];
                mu[y] == if d.is_multiple_of(2) { 1 } else { -1 }
            })
        })
    }

    /// `Σ_{x ∈ P} (-1)^{ρ(x)} μ(0̂, x)`.
    pub fn zaslavsky_sum(&self) -> i64 {
        self.signed_mobius_sum(-1)
    }

    /// `Σ_{x ∈ P} base^{ρ(x)} μ(0̂, x)`.
    pub fn signed_mobius_sum(&self, base: i64) -> i64 {
        let mu = self.mobius_row(self.bottom);
        (0..self.len())
            .map(|x| {
                base.checked_pow(self.rank[x] as u32)
                    .and_then(|p| p.checked_mul(mu[x]))
                    .expect("Möbius sum overflow")
            })
            .sum()
    }

    /// Saturated chains `x = x₀ ≺ x₁ ≺ ⋯ ≺ x_k = y`.
    pub fn maximal_chains(&self, x: usize, y: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut path = vec![x];
        self.extend_saturated(y, &mut path, &mut out);
        out
    }

    fn extend_saturated(&self, y: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *path.last().unwrap();
        if last == y {
            out.push(path.clone());
            return;
        }
        for &z in &self.up[last] {
            if self.leq[z][y] {
                path.push(z);
                self.extend_saturated(y, path, out);
                path.pop();
            }
        }
    }

    /// All chains `x = x₀ < x₁ < ⋯ < x_k = y` with arbitrary steps.
    pub fn chains(&self, x: usize, y: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        if !self.leq(x, y) {
            return out;
        }
        let mut path = vec![x];
        self.extend_chain(y, &mut path, &mut out);
        out
    }

    fn extend_chain(&self, y: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *path.last().unwrap();
        if last == y {
            out.push(path.clone());
            return;
        }
        for z in 0..self.len() {
            if self.lt(last, z) && self.leq[z][y] {
                path.push(z);
                self.extend_chain(y, path, out);
                path.pop();
            }
        }
    }

    /// Elements covering both `x` and `y`, excluding `exclude`.
    pub fn common_upper_covers(&self, x: usize, y: usize, exclude: Option<usize>) -> Vec<usize> {
        self.up[x]
            .iter()
            .copied()
            .filter(|z| self.up[y].contains(z) && Some(*z) != exclude)
            .collect()
    }

    /// A pair of distinct elements with two or more common upper covers
    /// other than the top; such a pair has no join, so the poset is not a
    /// lattice. Returns the first pair in index order.
    pub fn two_common_upper_covers(&self) -> Option<(usize, usize, Vec<usize>)> {
        let top = self.top();
        (0..self.len()).find_map(|x| {
            (x + 1..self.len()).find_map(|y| {
                let ups = self.common_upper_covers(x, y, Some(top));
                (ups.len() >= 2).then_some((x, y, ups))
            })
        })
    }

    /// Text form: `elem` lines sorted by (rank, id), then `cover` lines.
    pub fn emit(&self) -> String {
        let mut out = String::new();
        let order = self.sorted_elements();
        let pos: HashMap<usize, usize> = order.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let _ = writeln!(out, "# graded poset of rank {}, {} elements", self.rank(), self.len());
        for &x in &order {
            let _ = writeln!(out, "elem {}", self.names[x]);
        }
        let mut edges: Vec<(usize, usize)> = self.hasse_edges().collect();
        edges.sort_by_key(|&(x, y)| (pos[&x], pos[&y]));
        for (x, y) in edges {
            let _ = writeln!(out, "cover {} {}", self.names[x], self.names[y]);
        }
        out
    }
}

/// Parses the line-oriented poset format (`elem <id>`, `cover <id> <id>`,
/// `#` comments).
pub fn parse_poset(text: &str) -> Result<Poset> {
    let mut b = PosetBuilder::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            ["elem", id] => {
                b.element(*id);
            }
            ["cover", lo, hi] => b.cover_named(lo, hi),
            _ => {
                return Err(Error::MalformedLine {
                    line: lineno + 1,
                    text: raw.to_string(),
                })
            }
        }
    }
    b.build()
}

pub fn emit_poset(p: &Poset) -> String {
    p.emit()
}

/// The one-element poset.
pub fn point() -> Poset {
    chain(0)
}

/// Chain `0 < 1 < ⋯ < n` of rank `n`.
pub fn chain(n: usize) -> Poset {
    let mut b = PosetBuilder::new();
    b.element("0");
    for i in 1..=n {
        b.cover_named(&(i - 1).to_string(), &i.to_string());
    }
    b.build().expect("chain is graded")
}

fn subset_name(mask: u32, n: usize) -> String {
    let parts: Vec<String> = (0..n)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| (i + 1).to_string())
        .collect();
    format!("{{{}}}", parts.join(","))
}

/// Subsets of `{1, …, n}` ordered by inclusion.
pub fn boolean_algebra(n: usize) -> Poset {
    assert!(n < 20, "boolean algebra too large");
    let mut b = PosetBuilder::new();
    for mask in 0u32..(1 << n) {
        b.element(subset_name(mask, n));
    }
    for mask in 0u32..(1 << n) {
        for i in 0..n {
            if mask >> i & 1 == 0 {
                b.cover(mask as usize, (mask | 1 << i) as usize);
            }
        }
    }
    b.build().expect("boolean algebra is graded")
}

/// Rank `n + 1` poset with two incomparable elements at each rank
/// `1..=n`; its cd-index is `c^n`.
pub fn ladder(n: usize) -> Poset {
    let mut b = PosetBuilder::new();
    b.element("0");
    let mut below = vec!["0".to_string()];
    for r in 1..=n {
        let level = vec![format!("l{r}"), format!("r{r}")];
        for lo in &below {
            for hi in &level {
                b.cover_named(lo, hi);
            }
        }
        below = level;
    }
    for lo in &below {
        b.cover_named(lo, "top");
    }
    b.build().expect("ladder is graded")
}

/// Face lattice of the `n`-dimensional crosspolytope: signed subsets of
/// `{1, …, n}` ordered by restriction, plus a top element.
pub fn crosspolytope(n: usize) -> Poset {
    assert!((1..12).contains(&n), "crosspolytope dimension out of range");
    // Encode each signed subset in base 3: digit 0 absent, 1 plus, 2 minus.
    let total = 3usize.pow(n as u32);
    let digits = |mut code: usize| {
        let mut d = vec![0usize; n];
        for slot in d.iter_mut() {
            *slot = code % 3;
            code /= 3;
        }
        d
    };
    let name = |d: &[usize]| {
        let parts: Vec<String> = d
            .iter()
            .enumerate()
            .filter(|(_, &s)| s != 0)
            .map(|(i, &s)| format!("{}{}", if s == 1 { '+' } else { '-' }, i + 1))
            .collect();
        format!("{{{}}}", parts.join(","))
    };
    let mut b = PosetBuilder::new();
    for code in 0..total {
        b.element(name(&digits(code)));
    }
    let top = b.element("top");
    let pow3: Vec<usize> = (0..n).map(|i| 3usize.pow(i as u32)).collect();
    for code in 0..total {
        let d = digits(code);
        let size = d.iter().filter(|&&s| s != 0).count();
        if size == n {
            b.cover(code, top);
            continue;
        }
        for i in 0..n {
            if d[i] == 0 {
                b.cover(code, code + pow3[i]);
                b.cover(code, code + 2 * pow3[i]);
            }
        }
    }
    b.build().expect("crosspolytope face lattice is graded")
}

fn pair_name(x: &str, y: &str) -> String {
    format!("({x},{y})")
}

/// Componentwise order on `P × Q`; the pair `(x, y)` has index `x·|Q| + y`.
pub fn cartesian_product(p: &Poset, q: &Poset) -> Poset {
    let mut b = PosetBuilder::new();
    let id = |x: usize, y: usize| x * q.len() + y;
    for x in 0..p.len() {
        for y in 0..q.len() {
            b.element(pair_name(p.name(x), q.name(y)));
        }
    }
    for x in 0..p.len() {
        for y in 0..q.len() {
            for &x2 in p.upper_covers(x) {
                b.cover(id(x, y), id(x2, y));
            }
            for &y2 in q.upper_covers(y) {
                b.cover(id(x, y), id(x, y2));
            }
        }
    }
    b.build().expect("product of graded posets is graded")
}

/// `P ⋄ Q = (P − {0̂}) × (Q − {0̂}) ∪ {0̂}`.
pub fn diamond_product(p: &Poset, q: &Poset) -> Result<Poset> {
    if p.rank() == 0 || q.rank() == 0 {
        return Err(Error::RankZeroOperand);
    }
    let mut b = PosetBuilder::new();
    let bottom = b.element("(bot)");
    let mut ids = HashMap::new();
    for x in (0..p.len()).filter(|&x| x != p.bottom()) {
        for y in (0..q.len()).filter(|&y| y != q.bottom()) {
            ids.insert((x, y), b.element(pair_name(p.name(x), q.name(y))));
        }
    }
    for (&(x, y), &i) in &ids {
        for &x2 in p.upper_covers(x) {
            b.cover(i, ids[&(x2, y)]);
        }
        for &y2 in q.upper_covers(y) {
            b.cover(i, ids[&(x, y2)]);
        }
    }
    for &a in p.atoms() {
        for &c in q.atoms() {
            b.cover(bottom, ids[&(a, c)]);
        }
    }
    b.build()
}

/// `P ⋄* Q = (P − {1̂}) × (Q − {1̂}) ∪ {1̂}`.
pub fn dual_diamond_product(p: &Poset, q: &Poset) -> Result<Poset> {
    dual_diamond_product_with_map(p, q).map(|(poset, _)| poset)
}

/// [`dual_diamond_product`] together with the pair behind each element
/// (`None` for the new top).
pub fn dual_diamond_product_with_map(
    p: &Poset,
    q: &Poset,
) -> Result<(Poset, Vec<Option<(usize, usize)>>)> {
    if p.rank() == 0 || q.rank() == 0 {
        return Err(Error::RankZeroOperand);
    }
    let mut b = PosetBuilder::new();
    let mut ids = HashMap::new();
    let mut pairs = Vec::new();
    for x in (0..p.len()).filter(|&x| x != p.top()) {
        for y in (0..q.len()).filter(|&y| y != q.top()) {
            ids.insert((x, y), b.element(pair_name(p.name(x), q.name(y))));
            pairs.push(Some((x, y)));
        }
    }
    let top = b.element("(top)");
    pairs.push(None);
    for (&(x, y), &i) in &ids {
        for &x2 in p.upper_covers(x).iter().filter(|&&x2| x2 != p.top()) {
            b.cover(i, ids[&(x2, y)]);
        }
        for &y2 in q.upper_covers(y).iter().filter(|&&y2| y2 != q.top()) {
            b.cover(i, ids[&(x, y2)]);
        }
    }
    for &c in p.coatoms() {
        for &d in q.coatoms() {
            b.cover(ids[&(c, d)], top);
        }
    }
    Ok((b.build()?, pairs))
}

/// An element of `T(P)` other than its top: the pair `[x, y]` with `x`
/// either an element of `P` or the adjoined minimum (`None`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntervalElem {
    pub lower: Option<usize>,
    pub upper: usize,
}

/// Element bookkeeping for a Tchebyshev transform.
#[derive(Clone, Debug)]
pub struct TchebyshevPoset {
    pub poset: Poset,
    /// `elems[i]` is the pair behind element `i`; `None` for the new top.
    pub elems: Vec<Option<IntervalElem>>,
}

/// Tchebyshev transform of the first kind on posets.
///
/// Elements are the pairs `[x, y]`, `x < y` in `P ∪ {−1̂}`, plus a new top.
/// Covers: `[x,y] ≺ [y,w]` and `[x,y] ≺ [x,w]` whenever `y ≺ w`, and
/// `[x,1̂] ≺ 1̂`. The rank of `[x, y]` is `ρ(y)`.
pub fn tchebyshev_poset(p: &Poset) -> Result<Poset> {
    tchebyshev_poset_with_map(p).map(|t| t.poset)
}

pub fn tchebyshev_poset_with_map(p: &Poset) -> Result<TchebyshevPoset> {
    if p.rank() == 0 {
        return Err(Error::RankZeroInput);
    }
    let lower_name = |x: Option<usize>| x.map_or("-".to_string(), |x| p.name(x).to_string());
    let mut b = PosetBuilder::new();
    let mut ids: HashMap<IntervalElem, usize> = HashMap::new();
    let mut elems = Vec::new();
    let mut lowers: Vec<Option<usize>> = vec![None];
    lowers.extend((0..p.len()).map(Some));
    for &x in &lowers {
        for y in 0..p.len() {
            if x.is_none_or(|x| p.lt(x, y)) {
                let e = IntervalElem { lower: x, upper: y };
                let i = b.element(format!("[{},{}]", lower_name(x), p.name(y)));
                ids.insert(e, i);
                elems.push(Some(e));
            }
        }
    }
    let top = b.element("[top]");
    elems.push(None);
    for (&e, &i) in &ids {
        let y = e.upper;
        for &w in p.upper_covers(y) {
            b.cover(i, ids[&IntervalElem { lower: Some(y), upper: w }]);
            b.cover(i, ids[&IntervalElem { lower: e.lower, upper: w }]);
        }
        if y == p.top() {
            b.cover(i, top);
        }
    }
    Ok(TchebyshevPoset {
        poset: b.build()?,
        elems,
    })
}

/// Random graded bounded poset, deterministic in `seed`.
///
/// The rank is drawn from `1..=max_rank`, each inner rank level gets
/// `1..=width` elements, and each pair at consecutive ranks is a cover with
/// probability one half. Elements left without a lower (upper) cover then
/// get one to a uniformly chosen element of the level below (above).
pub fn random_graded_poset(max_rank: usize, width: usize, seed: u64) -> Result<Poset> {
    if max_rank == 0 || width == 0 {
        return Err(Error::BadParameter(
            "random poset needs max_rank ≥ 1 and width ≥ 1".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rank = rng.gen_range(1..=max_rank);
    let mut levels: Vec<Vec<usize>> = Vec::with_capacity(rank + 1);
    let mut b = PosetBuilder::new();
    for r in 0..=rank {
        let size = if r == 0 || r == rank {
            1
        } else {
            rng.gen_range(1..=width)
        };
        let level = (0..size)
            .map(|i| b.element(format!("r{r}x{i}")))
            .collect();
        levels.push(level);
    }
    let mut has_lower = vec![false; b.names.len()];
    let mut has_upper = vec![false; b.names.len()];
    for r in 0..rank {
        for &x in &levels[r] {
            for &y in &levels[r + 1] {
                if rng.gen_bool(0.5) {
                    b.cover(x, y);
                    has_upper[x] = true;
                    has_lower[y] = true;
                }
            }
        }
    }
    for r in 1..=rank {
        for &y in &levels[r] {
            if !has_lower[y] {
                let &x = levels[r - 1].choose(&mut rng).unwrap();
                b.cover(x, y);
                has_upper[x] = true;
                has_lower[y] = true;
            }
        }
    }
    for r in 0..rank {
        for &x in &levels[r] {
            if !has_upper[x] {
                let &y = levels[r + 1].choose(&mut rng).unwrap();
                b.cover(x, y);
                has_upper[x] = true;
            }
        }
    }
    b.build()
}
