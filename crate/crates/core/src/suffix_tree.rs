//! Suffix tree of `x$` over an integer alphabet.
//!
//! Built from the suffix array and LCP array of `x$` in one left-to-right
//! sweep. Internal nodes come first, numbered in reverse postorder with
//! children in letter order, so the root is node 0 and every internal node
//! precedes its internal descendants. Leaves follow in suffix-array order.

use std::fmt::Write as _;

use crate::seq::{Sequence, SENTINEL};
use crate::suffix_array::{lcp_array, suffix_array};

/// Index of a node in a [`SuffixTree`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeId(u32);

impl NodeId {
    pub const ROOT: NodeId = NodeId(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Position of an occurring word in the tree: the explicit node at or
/// directly below it plus the word's length. The word is explicit when
/// `depth` equals the node's word-depth, otherwise it sits inside the edge
/// entering `node`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Locus {
    pub node: NodeId,
    pub depth: usize,
}

#[derive(Debug, Clone, Copy)]
struct Node {
    parent: u32,
    depth: u32,
    count: u32,
    link: u32,
}

#[derive(Debug, Clone)]
pub struct SuffixTree {
    seq: Sequence,
    /// Ranks of `x` followed by the sentinel rank `sigma`.
    text: Vec<u32>,
    /// Fields read together during enumeration share a cache line.
    nodes: Vec<Node>,
    edge_start: Vec<u32>,
    /// Children of internal node `v` are
    /// `children[child_offsets[v]..child_offsets[v + 1]]`.
    child_offsets: Vec<u32>,
    children: Vec<u32>,
    leaf_for_suffix: Vec<u32>,
}

impl SuffixTree {
    /// Builds the suffix tree of `seq` with the sentinel appended.
    ///
    /// Panics if the sequence is longer than `u32::MAX / 2 - 1` letters.
    pub fn build(seq: &Sequence) -> Self {
        assert!(!seq.is_empty(), "cannot build a suffix tree of an empty sequence");
        assert!(seq.len() < (u32::MAX / 2 - 1) as usize, "sequence too long");
        let mut text = Vec::with_capacity(seq.len() + 1);
        text.extend_from_slice(seq.ranks());
        text.push(seq.sigma() as u32);

        let mut tree = if seq.sigma() < u8::MAX as usize {
            // Byte letters keep the random text reads compact.
            build_from(&text.iter().map(|&c| c as u8).collect::<Vec<u8>>(), seq.sigma())
        } else {
            build_from(&text, seq.sigma())
        };
        tree.seq = seq.clone();
        tree.text = text;
        tree
    }

    pub fn sequence(&self) -> &Sequence {
        &self.seq
    }

    /// Length of `x`, sentinel excluded.
    pub fn n(&self) -> usize {
        self.seq.len()
    }

    pub fn sigma(&self) -> usize {
        self.seq.sigma()
    }

    /// Rank used for the sentinel.
    pub fn sentinel(&self) -> u32 {
        self.seq.sigma() as u32
    }

    /// `x$` as ranks.
    pub fn text(&self) -> &[u32] {
        &self.text
    }

    pub fn root(&self) -> NodeId {
        NodeId::ROOT
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeId> {
        (0..self.node_count() as u32).map(NodeId)
    }

    /// Internal nodes, root first.
    pub fn internal_nodes(&self) -> impl Iterator<Item = NodeId> {
        (0..self.internal_count() as u32).map(NodeId)
    }

    fn internal_count(&self) -> usize {
        self.child_offsets.len() - 1
    }

    /// Parent of `v`; the root is its own parent.
    pub fn parent(&self, v: NodeId) -> NodeId {
        NodeId(self.nodes[v.index()].parent)
    }

    /// Word-depth: length of the path label, the sentinel included.
    pub fn depth(&self, v: NodeId) -> usize {
        self.nodes[v.index()].depth as usize
    }

    /// Number of leaves below `v`. For a node whose label avoids the
    /// sentinel this is the number of occurrences of the label in `x`.
    pub fn count(&self, v: NodeId) -> usize {
        self.nodes[v.index()].count as usize
    }

    /// Suffix link. Leaves link to the leaf of the next suffix, the `$` leaf
    /// and depth-one nodes link to the root, and the root links to itself.
    pub fn suffix_link(&self, v: NodeId) -> NodeId {
        NodeId(self.nodes[v.index()].link)
    }

    pub fn is_leaf(&self, v: NodeId) -> bool {
        v.index() >= self.internal_count()
    }

    /// Start index in `x$` of a suffix whose leaf is `v`.
    pub fn leaf_label(&self, v: NodeId) -> Option<usize> {
        self.is_leaf(v).then(|| self.text.len() - self.depth(v))
    }

    /// Leaf whose path label is `x[i..]$`, for `0 <= i <= n`.
    pub fn leaf_for_suffix(&self, i: usize) -> NodeId {
        NodeId(self.leaf_for_suffix[i])
    }

    /// Children of `v` in increasing order of their first edge letter.
    pub fn children(&self, v: NodeId) -> impl ExactSizeIterator<Item = NodeId> + DoubleEndedIterator + '_ {
        self.child_slice(v).iter().map(|&c| NodeId(c))
    }

    fn child_slice(&self, v: NodeId) -> &[u32] {
        if self.is_leaf(v) {
            return &[];
        }
        let lo = self.child_offsets[v.index()] as usize;
        let hi = self.child_offsets[v.index() + 1] as usize;
        &self.children[lo..hi]
    }

    /// Text range `[start, end)` of the label of the edge entering `v`.
    pub fn edge(&self, v: NodeId) -> (usize, usize) {
        let start = self.edge_start[v.index()] as usize;
        let len = self.depth(v) - self.depth(self.parent(v));
        (start, start + len)
    }

    /// First letter on the edge entering `v`. Meaningless for the root.
    pub fn first_letter(&self, v: NodeId) -> u32 {
        self.text[self.edge_start[v.index()] as usize]
    }

    /// Start of one occurrence of the path label of `v` in `x$`.
    pub fn occurrence(&self, v: NodeId) -> usize {
        if v == NodeId::ROOT {
            return 0;
        }
        self.edge_start[v.index()] as usize - self.depth(self.parent(v))
    }

    /// Path label of `v` as ranks (the sentinel rank may end a leaf label).
    pub fn label(&self, v: NodeId) -> &[u32] {
        let start = self.occurrence(v);
        &self.text[start..start + self.depth(v)]
    }

    /// Child of `v` whose edge starts with `letter`.
    pub fn child(&self, v: NodeId, letter: u32) -> Option<NodeId> {
        let kids = self.child_slice(v);
        kids.binary_search_by_key(&letter, |&c| self.first_letter(NodeId(c)))
            .ok()
            .map(|i| NodeId(kids[i]))
    }

    /// Answers a batch of child queries off-line in `O(n + q)`: queries are
    /// radix-sorted by (node, letter) and each node's child list is then
    /// scanned once.
    pub fn child_batch(&self, queries: &[(NodeId, u32)]) -> Vec<Option<NodeId>> {
        let q = queries.len();
        // Letters past the sentinel share one bucket; they never match.
        let beyond = self.sentinel() as usize + 1;

        // Stable counting sort on the letter, then on the node.
        let mut by_letter = vec![0u32; q];
        let mut buckets = vec![0usize; beyond + 2];
        for &(_, a) in queries {
            buckets[(a as usize).min(beyond) + 1] += 1;
        }
        for i in 1..buckets.len() {
            buckets[i] += buckets[i - 1];
        }
        for (i, &(_, a)) in queries.iter().enumerate() {
            let b = &mut buckets[(a as usize).min(beyond)];
            by_letter[*b] = i as u32;
            *b += 1;
        }
        let mut sorted = vec![0u32; q];
        let mut buckets = vec![0usize; self.node_count() + 1];
        for &(v, _) in queries {
            buckets[v.index() + 1] += 1;
        }
        for i in 1..buckets.len() {
            buckets[i] += buckets[i - 1];
        }
        for &i in &by_letter {
            let b = &mut buckets[queries[i as usize].0.index()];
            sorted[*b] = i;
            *b += 1;
        }

        let mut answers = vec![None; q];
        let mut k = 0;
        while k < q {
            let v = queries[sorted[k] as usize].0;
            let kids = self.child_slice(v);
            let mut c = 0;
            while k < q && queries[sorted[k] as usize].0 == v {
                let (_, a) = queries[sorted[k] as usize];
                while c < kids.len() && self.first_letter(NodeId(kids[c])) < a {
                    c += 1;
                }
                if c < kids.len() && self.first_letter(NodeId(kids[c])) == a {
                    answers[sorted[k] as usize] = Some(NodeId(kids[c]));
                }
                k += 1;
            }
        }
        answers
    }

    /// Finds the locus of `word` (given as ranks), or `None` if it does not
    /// occur in `x`.
    pub fn locate(&self, word: &[u32]) -> Option<Locus> {
        if word.is_empty() {
            return Some(Locus { node: NodeId::ROOT, depth: 0 });
        }
        let mut v = NodeId::ROOT;
        let mut matched = 0;
        loop {
            let next = self.child(v, word[matched])?;
            let (start, end) = self.edge(next);
            let take = (end - start).min(word.len() - matched);
            if self.text[start..start + take] != word[matched..matched + take] {
                return None;
            }
            matched += take;
            if matched == word.len() {
                return Some(Locus { node: next, depth: matched });
            }
            v = next;
        }
    }

    /// Like [`locate`](Self::locate) for a decoded word.
    pub fn locate_str(&self, word: &str) -> Option<Locus> {
        self.locate(&self.seq.encode_word(word)?)
    }

    /// Number of occurrences of `word` in `x`.
    pub fn occurrences(&self, word: &[u32]) -> usize {
        self.locate(word).map_or(0, |l| self.count(l.node))
    }

    /// Deterministic preorder dump, children in letter order, one node per
    /// line indented by tree level:
    /// `<edge label> D=<depth> C=<count> link=<id>` plus `leaf=<i>` on leaves.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        let mut stack = vec![(NodeId::ROOT, 0usize)];
        while let Some((v, level)) = stack.pop() {
            let (s, e) = self.edge(v);
            let label: String = self.text[s..e]
                .iter()
                .map(|&r| self.seq.symbols().get(r as usize).copied().unwrap_or(SENTINEL))
                .collect();
            let _ = write!(
                out,
                "{:indent$}{} D={} C={} link={}",
                "",
                if v == NodeId::ROOT { "(root)" } else { &label },
                self.depth(v),
                self.count(v),
                self.suffix_link(v).0,
                indent = 2 * level
            );
            if let Some(i) = self.leaf_label(v) {
                let _ = write!(out, " leaf={i}");
            }
            out.push('\n');
            stack.extend(self.children(v).rev().map(|c| (c, level + 1)));
        }
        out
    }
}

const NO_QUERY: u32 = u32::MAX;

/// Open interval of the construction sweep.
struct Open {
    depth: u32,
    /// First suffix-array rank covered.
    lb: u32,
    /// Where this node's finished children start on the child stack, or
    /// `None` for a leaf.
    kids_base: Option<u32>,
}

/// Builds the tree of `text` (ending with its unique largest letter
/// `sentinel`) by the bottom-up lcp-interval sweep over its suffix array.
/// Internal nodes are finished in postorder; the `k`-th one gets id
/// `internal - 1 - k`. The leaf of suffix-array rank `r` is `internal + r`.
fn build_from<T: Copy + Ord + Into<u32>>(text: &[T], sentinel: usize) -> SuffixTree {
    let len = text.len();
    let sa = suffix_array(text, sentinel as u32);
    let lcp = lcp_array(text, &sa);

    // Every internal node but the root is opened exactly once, so one pass
    // over the LCP values gives the node count up front.
    let mut internal = 1;
    let mut depths = vec![0u32];
    for &l in &lcp[1..] {
        while *depths.last().unwrap() > l {
            depths.pop();
        }
        if *depths.last().unwrap() < l {
            depths.push(l);
            internal += 1;
        }
    }
    drop(depths);
    let total = internal + len;

    // psi[r] is the rank of suffix sa[r] + 1. Scanning ranks in order and
    // stepping back one letter fills each first-letter bucket left to right.
    let mut psi = vec![0u32; len];
    {
        let mut next = vec![0u32; sentinel + 2];
        for &c in text {
            next[c.into() as usize + 1] += 1;
        }
        for c in 1..next.len() {
            next[c] += next[c - 1];
        }
        for (r, &p) in sa.iter().enumerate() {
            if p > 0 {
                let c = text[p as usize - 1].into() as usize;
                psi[next[c] as usize] = r as u32;
                next[c] += 1;
            }
        }
    }

    let mut nodes = vec![Node { parent: 0, depth: 0, count: 0, link: 0 }; total];
    let mut edge_start = vec![0u32; total];
    let mut leaf_for_suffix = vec![0u32; len];
    for (r, &p) in sa.iter().enumerate() {
        let id = internal + r;
        // The `$` suffix sorts last and links to the root.
        let link = if r + 1 < len { internal as u32 + psi[r] } else { 0 };
        nodes[id] = Node { parent: 0, depth: (len - p as usize) as u32, count: 1, link };
        edge_start[id] = p;
        leaf_for_suffix[p as usize] = id as u32;
    }

    let mut child_offsets = vec![0u32; internal + 1];
    let mut children = vec![0u32; total - 1];
    child_offsets[internal] = (total - 1) as u32;
    // Internal nodes awaiting their suffix link, listed by the rank of the
    // leaf whose root path holds the answer.
    let mut query_head = vec![NO_QUERY; len];
    let mut query_next = vec![NO_QUERY; internal];

    let mut open = vec![Open { depth: 0, lb: 0, kids_base: Some(0) }];
    let mut finished: Vec<u32> = Vec::new();
    let mut next_id = internal;
    let mut cursor = total - 1;
    // Closes every open interval deeper than `l` at rank `p`, then opens
    // the interval of depth `l` if it is new.
    let mut close = |open: &mut Vec<Open>, finished: &mut Vec<u32>, l: Option<u32>, p: usize| {
        while let Some(top) = open.last() {
            if l.is_some_and(|l| top.depth <= l) {
                break;
            }
            let e = open.pop().unwrap();
            let id = match e.kids_base {
                None => internal + e.lb as usize,
                Some(base) => {
                    next_id -= 1;
                    let id = next_id;
                    let kids = &finished[base as usize..];
                    cursor -= kids.len();
                    children[cursor..cursor + kids.len()].copy_from_slice(kids);
                    child_offsets[id] = cursor as u32;
                    for &c in kids {
                        nodes[c as usize].parent = id as u32;
                        edge_start[c as usize] += e.depth;
                    }
                    finished.truncate(base as usize);
                    nodes[id].depth = e.depth;
                    nodes[id].count = p as u32 - e.lb;
                    edge_start[id] = sa[e.lb as usize];
                    if e.depth > 0 {
                        // The link target is an ancestor of the leaf of the
                        // next suffix.
                        let r = psi[e.lb as usize] as usize;
                        query_next[id] = query_head[r];
                        query_head[r] = id as u32;
                    }
                    id
                }
            };
            finished.push(id as u32);
            if let (Some(l), Some(top)) = (l, open.last()) {
                if top.depth < l {
                    // The closed node's parent starts here, lazily.
                    let kids_base = Some((finished.len() - 1) as u32);
                    open.push(Open { depth: l, lb: e.lb, kids_base });
                    break;
                }
            }
        }
    };
    for p in 0..len {
        if p > 0 {
            close(&mut open, &mut finished, Some(lcp[p]), p);
        }
        open.push(Open { depth: len as u32 - sa[p], lb: p as u32, kids_base: None });
    }
    close(&mut open, &mut finished, None, len);
    debug_assert_eq!((next_id, cursor), (0, 0));
    drop(sa);
    drop(lcp);
    drop(psi);
    edge_start[0] = 0;

    internal_links(&mut nodes, &child_offsets, &children, &query_head, &query_next);

    SuffixTree {
        seq: Sequence::from_ranks(&[0], &['a']).unwrap(),
        text: Vec::new(),
        nodes,
        edge_start,
        child_offsets,
        children,
        leaf_for_suffix,
    }
}

/// Fills in the suffix links of internal nodes. The link of `v` is the
/// ancestor of depth `D(v) - 1` of one particular leaf; `query_head[r]`
/// lists (chained through `query_next`) the nodes waiting on the leaf of
/// rank `r`. One depth-first pass answers every level-ancestor query from
/// the current root path.
fn internal_links(nodes: &mut [Node], child_offsets: &[u32], children: &[u32], query_head: &[u32], query_next: &[u32]) {
    let internal = child_offsets.len() - 1;
    let mut path: Vec<u32> = Vec::new();
    let mut path_depth: Vec<u32> = Vec::new();
    // Pushing children in letter order visits internal nodes in id order.
    let mut stack = vec![0u32];
    while let Some(v) = stack.pop() {
        let parent = nodes[v as usize].parent;
        while path.last().is_some_and(|&top| top != parent) {
            path.pop();
            path_depth.pop();
        }
        let v = v as usize;
        if v >= internal {
            let mut q = query_head[v - internal];
            while q != NO_QUERY {
                let target = nodes[q as usize].depth - 1;
                let k = path_depth.partition_point(|&d| d < target);
                debug_assert_eq!(path_depth[k], target);
                nodes[q as usize].link = path[k];
                q = query_next[q as usize];
            }
        } else {
            path.push(v as u32);
            path_depth.push(nodes[v].depth);
            stack.extend_from_slice(&children[child_offsets[v] as usize..child_offsets[v + 1] as usize]);
        }
    }
}
