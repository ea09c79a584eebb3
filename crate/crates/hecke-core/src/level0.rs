//! The level-0 action of the affine 0-Hecke generators on the finite
//! Weyl group: action graphs, transitivity, explicit circular sorting
//! for types A and B, and S-reduced words for cosets.
//!
//! The right action is w.π_i = w·cl(s_i) when ⟨w^{-1}(ρ^∨), cl(α_i)⟩ > 0
//! and w otherwise. For classical i this is the usual right 0-Hecke
//! action; fixedness at i = 0 defines the affine descent.

use std::collections::VecDeque;

use num_traits::Signed;

use crate::cartan::AffineCartanDatum;
use crate::weyl::{ElemId, GroupTable};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Level0Error {
    #[error("operation requires type {expected}, got {got}")]
    WrongType { expected: String, got: String },
}

/// The element cl(s_0) = s_θ, the reflection by the highest root.
pub fn cl_s0(table: &GroupTable) -> ElemId {
    let cl = &table.datum;
    let theta = cl.cl_alpha0.neg();
    table.reflection(&theta, &cl.theta_vee)
}

/// Is i (affine index 0..=n) an affine descent of w, i.e. does the
/// level-0 π_i fix w?
pub fn is_affine_descent(table: &GroupTable, w: ElemId, i: usize) -> bool {
    let y = table.fingerprint(table.inverse(w));
    !y.pair(table.datum.cl_alpha(i)).is_positive()
}

/// w · cl(s_i) for an affine index.
pub fn level0_s(table: &GroupTable, w: ElemId, i: usize) -> ElemId {
    if i >= 1 {
        table.right(w, i)
    } else {
        table.mul(w, cl_s0(table))
    }
}

/// The level-0 projection: w·cl(s_i) when i is not an affine descent,
/// w otherwise.
pub fn level0_pi(table: &GroupTable, w: ElemId, i: usize) -> ElemId {
    if is_affine_descent(table, w, i) {
        w
    } else {
        level0_s(table, w, i)
    }
}

/// Tabulated level-0 action of π_0..π_n on the whole group.
#[derive(Debug, Clone)]
pub struct ActionGraph {
    /// s_edges[w][i] = w·cl(s_i) (affine index i ∈ 0..=n).
    s_edges: Vec<Vec<u32>>,
    /// Bit i set when π_i fixes the element (i is an affine descent).
    fixed: Vec<u32>,
    /// The element cl(s_0).
    pub cl_s0: ElemId,
    pub rank: usize,
}

/// Build the level-0 action graph; deterministic.
pub fn build_action_graph(table: &GroupTable, affine: &AffineCartanDatum) -> ActionGraph {
    assert_eq!(table.rank(), affine.rank, "group must match the datum");
    let n = table.rank();
    let s0 = cl_s0(table);
    // Right multiplication by s_θ tabulated once.
    let right_s0: Vec<u32> = table.elements().map(|w| table.mul(w, s0).0).collect();
    let mut s_edges = Vec::with_capacity(table.size());
    let mut fixed = Vec::with_capacity(table.size());
    for w in table.elements() {
        let mut row = Vec::with_capacity(n + 1);
        let mut mask = 0u32;
        for i in 0..=n {
            row.push(if i == 0 {
                right_s0[w.idx()]
            } else {
                table.right(w, i).0
            });
            if is_affine_descent(table, w, i) {
                mask |= 1 << i;
            }
        }
        s_edges.push(row);
        fixed.push(mask);
    }
    ActionGraph {
        s_edges,
        fixed,
        cl_s0: s0,
        rank: n,
    }
}

impl ActionGraph {
    pub fn size(&self) -> usize {
        self.s_edges.len()
    }

    /// w.π_i.
    pub fn pi(&self, w: ElemId, i: usize) -> ElemId {
        if self.is_fixed(w, i) {
            w
        } else {
            self.s(w, i)
        }
    }

    /// w.π̄_i: the mirror projection moves exactly when π_i fixes.
    pub fn pi_bar(&self, w: ElemId, i: usize) -> ElemId {
        if self.is_fixed(w, i) {
            self.s(w, i)
        } else {
            w
        }
    }

    /// w·cl(s_i), read off the graph.
    pub fn s(&self, w: ElemId, i: usize) -> ElemId {
        ElemId(self.s_edges[w.idx()][i])
    }

    /// Replay a word through the π action.
    pub fn replay(&self, start: ElemId, word: &[usize]) -> ElemId {
        let mut u = start;
        for &i in word {
            u = self.pi(u, i);
        }
        u
    }

    pub fn is_fixed(&self, w: ElemId, i: usize) -> bool {
        self.fixed[w.idx()] & (1 << i) != 0
    }

    /// Affine descent set of w as a bitmask over 0..=n.
    pub fn fixed_mask(&self, w: ElemId) -> u32 {
        self.fixed[w.idx()]
    }
}

/// Strong connectivity of the digraph of non-fixed π edges.
pub fn is_transitive(graph: &ActionGraph) -> bool {
    is_transitive_over(graph, &(0..=graph.rank).collect::<Vec<_>>())
}

/// Strong connectivity using only the generators in `gens`.
pub fn is_transitive_over(graph: &ActionGraph, gens: &[usize]) -> bool {
    let size = graph.size();
    if size == 0 {
        return true;
    }
    // Forward reachability from node 0.
    let forward = reach(size, |w| {
        gens.iter()
            .filter(|&&i| !graph.is_fixed(ElemId(w), i))
            .map(|&i| graph.pi(ElemId(w), i).0)
            .collect()
    });
    if forward.iter().any(|&r| !r) {
        return false;
    }
    // Backward reachability: build the reverse adjacency once.
    let mut rev: Vec<Vec<u32>> = vec![Vec::new(); size];
    for w in 0..size {
        for &i in gens {
            if !graph.is_fixed(ElemId(w as u32), i) {
                rev[graph.pi(ElemId(w as u32), i).idx()].push(w as u32);
            }
        }
    }
    let backward = reach(size, |w| rev[w as usize].clone());
    backward.iter().all(|&r| r)
}

fn reach(size: usize, neighbors: impl Fn(u32) -> Vec<u32>) -> Vec<bool> {
    let mut seen = vec![false; size];
    seen[0] = true;
    let mut queue = VecDeque::from([0u32]);
    while let Some(w) = queue.pop_front() {
        for v in neighbors(w) {
            if !seen[v as usize] {
                seen[v as usize] = true;
                queue.push_back(v);
            }
        }
    }
    seen
}

/// A replayable word carrying an element to a target through the
/// level-0 action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SortCertificate {
    pub start: ElemId,
    pub word: Vec<usize>,
    pub target: ElemId,
}

impl SortCertificate {
    pub fn verify(&self, graph: &ActionGraph) -> bool {
        graph.replay(self.start, &self.word) == self.target
    }
}

/// Shortest sorting word to the identity by BFS in the action graph.
pub fn bfs_sort(graph: &ActionGraph, start: ElemId) -> SortCertificate {
    let word = bfs_word(graph, &[start], &[ElemId(0)]).expect("the level-0 action is transitive");
    SortCertificate {
        start,
        word,
        target: ElemId(0),
    }
}

/// Lexicographically-first shortest word carrying some element of
/// `sources` into `targets` through non-trivial π steps.
fn bfs_word(graph: &ActionGraph, sources: &[ElemId], targets: &[ElemId]) -> Option<Vec<usize>> {
    let size = graph.size();
    // Distance to the target set over reversed non-trivial edges.
    let mut dist = vec![usize::MAX; size];
    let mut rev: Vec<Vec<u32>> = vec![Vec::new(); size];
    for w in 0..size as u32 {
        for i in 0..=graph.rank {
            if !graph.is_fixed(ElemId(w), i) {
                rev[graph.pi(ElemId(w), i).idx()].push(w);
            }
        }
    }
    let mut queue = VecDeque::new();
    for &t in targets {
        if dist[t.idx()] == usize::MAX {
            dist[t.idx()] = 0;
            queue.push_back(t.0);
        }
    }
    while let Some(u) = queue.pop_front() {
        for &v in &rev[u as usize] {
            if dist[v as usize] == usize::MAX {
                dist[v as usize] = dist[u as usize] + 1;
                queue.push_back(v);
            }
        }
    }
    let r = sources.iter().map(|s| dist[s.idx()]).min()?;
    if r == usize::MAX {
        return None;
    }
    // Greedy lexicographically-first descent through the distance levels.
    let mut word = Vec::with_capacity(r);
    let mut frontier: Vec<ElemId> = sources.iter().copied().filter(|s| dist[s.idx()] == r).collect();
    for step in 0..r {
        let want = r - step - 1;
        let mut chosen = None;
        for i in 0..=graph.rank {
            let next: Vec<ElemId> = frontier
                .iter()
                .filter(|&&u| !graph.is_fixed(u, i) && dist[graph.pi(u, i).idx()] == want)
                .map(|&u| graph.pi(u, i))
                .collect();
            if !next.is_empty() {
                chosen = Some((i, next));
                break;
            }
        }
        let (i, mut next) = chosen.expect("distance levels are connected");
        next.sort_unstable();
        next.dedup();
        word.push(i);
        frontier = next;
    }
    Some(word)
}

/// Parabolic subgroup W_J, enumerated inside the table.
pub fn parabolic_subgroup(table: &GroupTable, j: &[usize]) -> Vec<ElemId> {
    let mut seen = std::collections::BTreeSet::new();
    seen.insert(table.identity());
    let mut queue = VecDeque::from([table.identity()]);
    while let Some(u) = queue.pop_front() {
        for &i in j {
            let v = table.right(u, i);
            if seen.insert(v) {
                queue.push_back(v);
            }
        }
    }
    seen.into_iter().collect()
}

/// Minimal word over π_0..π_n carrying some element of W_J·w^{−1} into
/// W_J (an S-reduced word for the coset w·W_J). Deterministic: the
/// lexicographically-first among the shortest.
pub fn s_reduced_word(
    table: &GroupTable,
    graph: &ActionGraph,
    w: ElemId,
    j: &[usize],
) -> Vec<usize> {
    let subgroup = parabolic_subgroup(table, j);
    let winv = table.inverse(w);
    let sources: Vec<ElemId> = subgroup.iter().map(|&u| table.mul(u, winv)).collect();
    bfs_word(graph, &sources, &subgroup).expect("the level-0 action is transitive")
}

/// Bound on the certificate length of the type-A circular sorter,
/// computed from the recursion itself.
pub fn type_a_certificate_bound(rank: usize) -> usize {
    let d = rank + 1;
    // Gadget lengths g_m: g_d = 1, g_{m−1} = m·g_m + m(m−2) + 1.
    let mut g = 1usize;
    let mut bound = 0usize;
    for m in (2..=d).rev() {
        bound += m - 2 + g;
        if m >= 2 {
            g = m * g + m * (m - 2) + 1;
        }
    }
    bound
}

fn gadget_words_type_a(d: usize) -> Vec<Vec<usize>> {
    // gadgets[m] = word acting like π_0 on the last m positions; only
    // m = 2..=d are meaningful. gadgets[d] = [0].
    let mut gadgets: Vec<Vec<usize>> = vec![Vec::new(); d + 1];
    gadgets[d] = vec![0];
    for m in (2..=d).rev().skip(1) {
        // Build gadget for size m from the enclosing size m+1 at
        // offset o = d − (m+1); internal generators o+1..o+n', n' = m.
        let o = d - (m + 1);
        let np = m;
        let outer = gadgets[m + 1].clone();
        let mut word = Vec::new();
        for j in 1..np {
            word.push(o + j);
        }
        word.extend_from_slice(&outer);
        word.push(o + np);
        word.extend_from_slice(&outer);
        for _ in 0..np - 1 {
            for j in 1..=np {
                word.push(o + j);
            }
            word.extend_from_slice(&outer);
        }
        gadgets[m] = word;
    }
    gadgets
}

/// Apply a type-A generator to the letter vector (values of
/// w^{-1}(ρ^∨)): π_i swaps adjacent letters when the left one is
/// larger; π_0 compares last against first around the circle.
fn apply_gen_type_a(y: &mut [i64], i: usize) {
    let d = y.len();
    if i == 0 {
        if y[d - 1] > y[0] {
            y.swap(0, d - 1);
        }
    } else if y[i - 1] > y[i] {
        y.swap(i - 1, i);
    }
}

/// The circular sorting recursion for type A: brings the largest
/// letter to the front with one wrap through π_0 (or its gadget), then
/// recurses on the remaining circle.
pub fn circular_sort_type_a(
    table: &GroupTable,
    start: ElemId,
) -> Result<SortCertificate, Level0Error> {
    if table.datum.family != crate::cartan::Family::A {
        return Err(Level0Error::WrongType {
            expected: "A".into(),
            got: table.datum.family.to_string(),
        });
    }
    let d = table.datum.ambient_dim;
    let mut y: Vec<i64> = table
        .fingerprint(table.inverse(start))
        .coords
        .iter()
        .map(|c| i64::try_from(c.to_integer()).expect("small orbit values"))
        .collect();
    let gadgets = gadget_words_type_a(d);
    let mut word = Vec::new();
    let emit = |y: &mut [i64], word: &mut Vec<usize>, w: &[usize]| {
        for &i in w {
            apply_gen_type_a(y, i);
            word.push(i);
        }
    };
    for m in (2..=d).rev() {
        let o = d - m;
        let z = m as i64;
        let p = y.iter().position(|&v| v == z).expect("letter present");
        if p == o {
            continue;
        }
        // Move z right to the last position, then wrap to the front of
        // the sub-circle.
        let steps: Vec<usize> = (p + 1..d).collect();
        emit(&mut y, &mut word, &steps);
        let gadget = gadgets[m].clone();
        emit(&mut y, &mut word, &gadget);
        debug_assert_eq!(y[o], z);
    }
    debug_assert!(y.iter().enumerate().all(|(i, &v)| v == (d - i) as i64));
    Ok(SortCertificate {
        start,
        word,
        target: table.identity(),
    })
}

/// Apply a type-B generator to the signed letter vector.
fn apply_gen_type_b(y: &mut [i64], i: usize) {
    let n = y.len();
    if i == 0 {
        if y[0] + y[1] < 0 {
            let (a, b) = (y[0], y[1]);
            y[0] = -b;
            y[1] = -a;
        }
    } else if i == n {
        if y[n - 1] > 0 {
            y[n - 1] = -y[n - 1];
        }
    } else if y[i - 1] > y[i] {
        y.swap(i - 1, i);
    }
}

/// Gadget implementing the circular flip of the sub-problem at pair
/// depth `t+1`, built from the depth-`t` gadget (type B).
fn next_gadget_type_b(n: usize, t: usize, outer: &[usize]) -> Vec<usize> {
    let o = 2 * t;
    let m = n - 2 * t;
    debug_assert!(m >= 4);
    let mut w = Vec::new();
    // Move the placed pair out of the way: z y x1 x2 … ↦ x1 x2 z y ….
    for j in [2, 3, 1, 2] {
        w.push(o + j);
    }
    w.extend_from_slice(outer);
    // Circulate the pair from local (3,4) to the right end…
    for j in 3..=m - 2 {
        w.push(o + j + 1);
        w.push(o + j);
    }
    // …flip it negative…
    w.push(n);
    w.push(o + m - 1);
    w.push(n);
    // …walk it back left to local (1,2)…
    for j in (1..=m - 2).rev() {
        w.push(o + j);
        w.push(o + j + 1);
    }
    // …and flip it positive again.
    w.extend_from_slice(outer);
    w
}

/// The recursive sorting algorithm for type B (rank ≥ 4): place the
/// two largest letters as a positive pair at the front, then recurse
/// with a gadget playing the role of π_0 two positions deeper. Ranks
/// 2 and 3 fall back to BFS certificates.
pub fn sort_type_b(
    table: &GroupTable,
    graph: &ActionGraph,
    start: ElemId,
) -> Result<SortCertificate, Level0Error> {
    if table.datum.family != crate::cartan::Family::B {
        return Err(Level0Error::WrongType {
            expected: "B".into(),
            got: table.datum.family.to_string(),
        });
    }
    let n = table.datum.rank;
    if n <= 3 {
        return Ok(bfs_sort(graph, start));
    }
    let mut y: Vec<i64> = table
        .fingerprint(table.inverse(start))
        .coords
        .iter()
        .map(|c| i64::try_from(c.to_integer()).expect("small orbit values"))
        .collect();
    let mut word = Vec::new();
    let emit = |y: &mut [i64], word: &mut Vec<usize>, w: &[usize]| {
        for &i in w {
            apply_gen_type_b(y, i);
            word.push(i);
        }
    };
    let mut gadget: Vec<usize> = vec![0];
    let mut t = 0usize;
    while n - 2 * t >= 4 {
        let o = 2 * t;
        let m = n - 2 * t;
        let z = m as i64;
        let yv = m as i64 - 1;
        let locals: Vec<usize> = (1..m).map(|j| o + j).collect();
        // Phase A: bring +z to local position 1.
        let k = y[o..].iter().position(|&v| v.abs() == z).unwrap() + 1;
        if y[o + k - 1] == z {
            if k != 1 {
                emit(&mut y, &mut word, &locals[k - 1..]);
                emit(&mut y, &mut word, &[n]);
                let lefts: Vec<usize> = (2..m).rev().map(|j| o + j).collect();
                emit(&mut y, &mut word, &lefts);
                let g = gadget.clone();
                emit(&mut y, &mut word, &g);
            }
        } else {
            // −z somewhere: bring it to local 2 and wrap.
            if k == 1 {
                let g = gadget.clone();
                emit(&mut y, &mut word, &g); // +z now at local 2
                emit(&mut y, &mut word, &locals[1..]);
                emit(&mut y, &mut word, &[n]);
            } else if k > 2 {
                let lefts: Vec<usize> = (2..k).rev().map(|j| o + j).collect();
                emit(&mut y, &mut word, &lefts);
            }
            if y[o + 1] == -z {
                let g = gadget.clone();
                emit(&mut y, &mut word, &g);
            } else {
                // −z ended at the right end after the wrap above.
                let lefts: Vec<usize> = (2..m).rev().map(|j| o + j).collect();
                emit(&mut y, &mut word, &lefts);
                let g = gadget.clone();
                emit(&mut y, &mut word, &g);
            }
        }
        debug_assert_eq!(y[o], z, "phase A places +{z} first");
        // Phase B: bring −y to local position 2.
        let k = y[o..].iter().position(|&v| v.abs() == yv).unwrap() + 1;
        if y[o + k - 1] == yv {
            if k < m {
                emit(&mut y, &mut word, &locals[k - 1..]);
            }
            emit(&mut y, &mut word, &[n]);
            let lefts: Vec<usize> = (2..m).rev().map(|j| o + j).collect();
            emit(&mut y, &mut word, &lefts);
        } else if k > 2 {
            let lefts: Vec<usize> = (2..k).rev().map(|j| o + j).collect();
            emit(&mut y, &mut word, &lefts);
        }
        debug_assert_eq!(y[o + 1], -yv, "phase B places −{yv} second");
        // Phase C: rotate into the positive pair (z, y).
        emit(&mut y, &mut word, &[o + 1]);
        emit(&mut y, &mut word, &locals[1..]);
        emit(&mut y, &mut word, &[n]);
        let lefts: Vec<usize> = (2..m).rev().map(|j| o + j).collect();
        emit(&mut y, &mut word, &lefts);
        let g = gadget.clone();
        emit(&mut y, &mut word, &g);
        debug_assert_eq!(y[o], z);
        debug_assert_eq!(y[o + 1], yv);
        // Descend.
        gadget = next_gadget_type_b(n, t, &gadget);
        t += 1;
    }
    // Base case: BFS over the virtual generators of the residual
    // sub-problem (size 2 or 3).
    let o = 2 * t;
    let m = n - 2 * t;
    let mut virtuals: Vec<Vec<usize>> = vec![gadget.clone()];
    for j in 1..m {
        virtuals.push(vec![o + j]);
    }
    virtuals.push(vec![n]);
    let target: Vec<i64> = (1..=m as i64).rev().collect();
    let base_word = bfs_on_letters(&y[o..], &target, &virtuals, &mut y.clone(), o);
    emit(&mut y, &mut word, &base_word);
    debug_assert!(y.iter().enumerate().all(|(i, &v)| v == (n - i) as i64));
    Ok(SortCertificate {
        start,
        word,
        target: table.identity(),
    })
}

/// BFS over suffix states with word-valued generators (type B base
/// cases). Returns the flat word in global indices.
fn bfs_on_letters(
    suffix: &[i64],
    target: &[i64],
    virtuals: &[Vec<usize>],
    scratch: &mut Vec<i64>,
    offset: usize,
) -> Vec<usize> {
    use std::collections::BTreeMap;
    let start: Vec<i64> = suffix.to_vec();
    if start == target {
        return Vec::new();
    }
    let mut parent: BTreeMap<Vec<i64>, (Vec<i64>, usize)> = BTreeMap::new();
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(state) = queue.pop_front() {
        for (gi, vword) in virtuals.iter().enumerate() {
            // Apply the virtual generator on the full vector.
            let prefix_len = offset;
            scratch.truncate(0);
            scratch.extend((1..=prefix_len as i64).rev().map(|v| v + (suffix.len() as i64)));
            scratch.extend(&state);
            for &i in vword {
                apply_gen_type_b(scratch, i);
            }
            let next: Vec<i64> = scratch[offset..].to_vec();
            debug_assert_eq!(
                &scratch[..offset],
                &(1..=prefix_len as i64)
                    .rev()
                    .map(|v| v + (suffix.len() as i64))
                    .collect::<Vec<_>>()[..],
                "gadgets preserve the placed prefix"
            );
            if next != state && !parent.contains_key(&next) {
                parent.insert(next.clone(), (state.clone(), gi));
                if next == target {
                    // Reconstruct.
                    let mut path = Vec::new();
                    let mut cur = next;
                    while cur != start {
                        let (prev, gi) = parent.get(&cur).unwrap().clone();
                        path.push(gi);
                        cur = prev;
                    }
                    path.reverse();
                    let mut word = Vec::new();
                    for gi in path {
                        word.extend_from_slice(&virtuals[gi]);
                    }
                    return word;
                }
                queue.push_back(next);
            }
        }
    }
    panic!("base-case sorting BFS must reach the sorted state");
}

/// DOT export of the action graph: non-fixed edges only, labels by
/// generator index, nodes in signed one-line (or reduced-word) labels.
pub fn action_graph_dot(table: &GroupTable, graph: &ActionGraph) -> String {
    let mut out = String::from("digraph level0 {\n");
    for w in table.elements() {
        out.push_str(&format!("  n{} [label=\"{}\"];\n", w.0, table.label(w)));
    }
    for w in table.elements() {
        for i in 0..=graph.rank {
            if !graph.is_fixed(w, i) {
                out.push_str(&format!(
                    "  n{} -> n{} [label=\"{}\"];\n",
                    w.0,
                    graph.pi(w, i).0,
                    i
                ));
            }
        }
    }
    out.push_str("}\n");
    out
}
