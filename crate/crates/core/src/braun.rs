//! C–D index numerals and Braun-tree sequences.
//!
//! A C–D numeral is `Z` (0), `C i` (2i + 1) or `D i` (2i + 2). Unlike the
//! `A`/`B` binary numerals this system is bijective: every digit string
//! names a distinct natural and every natural has one, with no canonicality
//! rule.
//!
//! That makes the numeral a trie path. A sequence is stored as a binary tree
//! whose root holds index `Z`, whose left subtree holds the subsequence of
//! indices `C i` (addressed by `i`) and whose right subtree holds the indices
//! `D i`. Every digit string is a valid index, so every node of the tree
//! holds an element and the subtree sizes differ by at most one, left
//! heavier: a Braun tree.
//!
//! Indexing with the `A`/`B` numerals instead does not work as a trie: an
//! index ending in `A Z` would break the no-leading-zero rule, so every left
//! child of such a tree would be an empty slot. The crate does not ship that
//! variant.
//!
//! Access, update, cons and rest all walk a single root-to-leaf path, so they
//! take time logarithmic in the index or length. Every operation is
//! persistent: untouched subtrees are shared between the old and new
//! versions through [`Arc`].

use std::fmt;
use std::sync::Arc;

use crate::costmeter::{Meter, Unmetered};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CdIndex {
    Z,
    C(Arc<CdIndex>),
    D(Arc<CdIndex>),
}

impl CdIndex {
    pub fn from_u64(n: u64) -> CdIndex {
        match n {
            0 => CdIndex::Z,
            n if n % 2 == 1 => CdIndex::C(Arc::new(CdIndex::from_u64((n - 1) / 2))),
            n => CdIndex::D(Arc::new(CdIndex::from_u64((n - 2) / 2))),
        }
    }

    pub fn to_u64(&self) -> Result<u64> {
        let step = |i: &CdIndex, bit: u64| {
            i.to_u64()?
                .checked_mul(2)
                .and_then(|v| v.checked_add(bit))
                .ok_or(Error::Overflow)
        };
        match self {
            CdIndex::Z => Ok(0),
            CdIndex::C(i) => step(i, 1),
            CdIndex::D(i) => step(i, 2),
        }
    }

    /// Number of `C`/`D` digits.
    pub fn digits(&self) -> u64 {
        match self {
            CdIndex::Z => 0,
            CdIndex::C(i) | CdIndex::D(i) => 1 + i.digits(),
        }
    }
}

impl TryFrom<i64> for CdIndex {
    type Error = Error;

    fn try_from(n: i64) -> Result<Self> {
        u64::try_from(n)
            .map(CdIndex::from_u64)
            .map_err(|_| Error::domain(format!("{n} is negative, not an index")))
    }
}

impl fmt::Display for CdIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CdIndex::Z => f.write_str("Z"),
            CdIndex::C(i) => write!(f, "C({i})"),
            CdIndex::D(i) => write!(f, "D({i})"),
        }
    }
}

pub fn cd_from_int(n: i64) -> Result<CdIndex> {
    CdIndex::try_from(n)
}

pub fn cd_to_int(i: &CdIndex) -> Result<u64> {
    i.to_u64()
}

/// C–D digits of a machine index without building the numeral: the number
/// of halvings needed to reach 0.
pub fn cd_digit_count(mut i: u64) -> u64 {
    let mut d = 0;
    while i > 0 {
        i = (i - 1) / 2;
        d += 1;
    }
    d
}

#[derive(Debug, PartialEq, Eq, Hash)]
pub struct Node<E> {
    pub elem: E,
    pub left: BraunTree<E>,
    pub right: BraunTree<E>,
}

#[derive(Debug, PartialEq, Eq, Hash)]
pub enum BraunTree<E> {
    Leaf,
    Node(Arc<Node<E>>),
}

// Derived Clone would demand `E: Clone`; cloning only bumps a refcount.
impl<E> Clone for BraunTree<E> {
    fn clone(&self) -> Self {
        match self {
            BraunTree::Leaf => BraunTree::Leaf,
            BraunTree::Node(n) => BraunTree::Node(Arc::clone(n)),
        }
    }
}

impl<E> BraunTree<E> {
    fn node(elem: E, left: BraunTree<E>, right: BraunTree<E>) -> Self {
        BraunTree::Node(Arc::new(Node { elem, left, right }))
    }

    pub fn count(&self) -> usize {
        match self {
            BraunTree::Leaf => 0,
            BraunTree::Node(n) => 1 + n.left.count() + n.right.count(),
        }
    }

    pub fn depth(&self) -> u64 {
        match self {
            BraunTree::Leaf => 0,
            BraunTree::Node(n) => 1 + n.left.depth().max(n.right.depth()),
        }
    }

    /// Checks the size balance at every node; returns the node count if it holds.
    pub fn check_shape(&self) -> Option<usize> {
        match self {
            BraunTree::Leaf => Some(0),
            BraunTree::Node(n) => {
                let l = n.left.check_shape()?;
                let r = n.right.check_shape()?;
                (l == r || l == r + 1).then_some(1 + l + r)
            }
        }
    }

    fn get_cd<M: Meter>(&self, i: &CdIndex, m: &mut M) -> Option<&E> {
        let BraunTree::Node(n) = self else {
            return None;
        };
        match i {
            CdIndex::Z => Some(&n.elem),
            CdIndex::C(i) => {
                m.tick();
                n.left.get_cd(i, m)
            }
            CdIndex::D(i) => {
                m.tick();
                n.right.get_cd(i, m)
            }
        }
    }
}

impl<E: Clone> BraunTree<E> {
    fn get<M: Meter>(&self, i: u64, m: &mut M) -> Option<&E> {
        let BraunTree::Node(n) = self else {
            return None;
        };
        match i {
            0 => Some(&n.elem),
            i if i % 2 == 1 => {
                m.tick();
                n.left.get((i - 1) / 2, m)
            }
            i => {
                m.tick();
                n.right.get((i - 2) / 2, m)
            }
        }
    }

    fn set(&self, i: u64, v: E) -> Option<Self> {
        let BraunTree::Node(n) = self else {
            return None;
        };
        Some(match i {
            0 => Self::node(v, n.left.clone(), n.right.clone()),
            i if i % 2 == 1 => Self::node(n.elem.clone(), n.left.set((i - 1) / 2, v)?, n.right.clone()),
            i => Self::node(n.elem.clone(), n.left.clone(), n.right.set((i - 2) / 2, v)?),
        })
    }

    // cons v Leaf           = Node v Leaf Leaf
    // cons v (Node x l r)   = Node v (cons x r) l
    fn cons<M: Meter>(&self, v: E, m: &mut M) -> Self {
        m.tick();
        match self {
            BraunTree::Leaf => Self::node(v, BraunTree::Leaf, BraunTree::Leaf),
            BraunTree::Node(n) => {
                let left = n.right.cons(n.elem.clone(), m);
                Self::node(v, left, n.left.clone())
            }
        }
    }

    // rest (Node _ Leaf _)  = Leaf
    // rest (Node _ l r)     = Node (first l) r (rest l)
    fn rest<M: Meter>(&self, m: &mut M) -> Self {
        m.tick();
        match self {
            BraunTree::Leaf => BraunTree::Leaf,
            BraunTree::Node(n) => match &n.left {
                BraunTree::Leaf => BraunTree::Leaf,
                BraunTree::Node(l) => {
                    let right = n.left.rest(m);
                    Self::node(l.elem.clone(), n.right.clone(), right)
                }
            },
        }
    }

    // to_list (Node x l r) = x : interleave (to_list l) (to_list r)
    fn collect(&self) -> Vec<E> {
        match self {
            BraunTree::Leaf => Vec::new(),
            BraunTree::Node(n) => {
                let left = n.left.collect();
                let right = n.right.collect();
                let mut out = Vec::with_capacity(1 + left.len() + right.len());
                out.push(n.elem.clone());
                let mut r = right.into_iter();
                for x in left {
                    out.push(x);
                    out.extend(r.next());
                }
                out
            }
        }
    }
}

/// A Braun tree with its element count.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct BraunSeq<E> {
    len: usize,
    tree: BraunTree<E>,
}

impl<E> Clone for BraunSeq<E> {
    fn clone(&self) -> Self {
        BraunSeq {
            len: self.len,
            tree: self.tree.clone(),
        }
    }
}

impl<E> Default for BraunSeq<E> {
    fn default() -> Self {
        BraunSeq::new()
    }
}

impl<E> BraunSeq<E> {
    pub fn new() -> Self {
        BraunSeq {
            len: 0,
            tree: BraunTree::Leaf,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn tree(&self) -> &BraunTree<E> {
        &self.tree
    }

    /// Longest root-to-node path, counted in nodes.
    pub fn depth(&self) -> u64 {
        self.tree.depth()
    }

    /// Direct digit descent. A `Leaf` met along the way means the index is
    /// past the end; the cached length is not consulted.
    pub fn access_cd(&self, i: &CdIndex) -> Result<&E> {
        self.access_cd_metered(i, &mut Unmetered)
    }

    /// Counts one step per digit consumed (each descent into a subtree).
    pub fn access_cd_metered<M: Meter>(&self, i: &CdIndex, m: &mut M) -> Result<&E> {
        self.tree.get_cd(i, m).ok_or_else(|| Error::Index {
            index: i.to_u64().unwrap_or(u64::MAX),
            len: self.len,
        })
    }

    fn check_index(&self, i: u64) -> Result<()> {
        if i < self.len as u64 {
            Ok(())
        } else {
            Err(Error::Index {
                index: i,
                len: self.len,
            })
        }
    }

    fn nonempty(&self, what: &str) -> Result<()> {
        if self.is_empty() {
            Err(Error::domain(format!("{what} of an empty sequence")))
        } else {
            Ok(())
        }
    }
}

impl<E: Clone> BraunSeq<E> {
    pub fn from_list(xs: impl IntoIterator<Item = E>) -> Self {
        let xs: Vec<E> = xs.into_iter().collect();
        xs.into_iter().rev().fold(BraunSeq::new(), |s, x| s.cons(x))
    }

    pub fn to_list(&self) -> Vec<E> {
        self.tree.collect()
    }

    pub fn access(&self, i: u64) -> Result<&E> {
        self.access_metered(i, &mut Unmetered)
    }

    /// Counts one step per descent into a subtree, i.e. per C–D digit of `i`.
    pub fn access_metered<M: Meter>(&self, i: u64, m: &mut M) -> Result<&E> {
        self.check_index(i)?;
        Ok(self
            .tree
            .get(i, m)
            .expect("index below the cached length is present"))
    }

    pub fn update(&self, i: u64, v: E) -> Result<Self> {
        self.check_index(i)?;
        Ok(BraunSeq {
            len: self.len,
            tree: self.tree.set(i, v).expect("index below the cached length is present"),
        })
    }

    pub fn cons(&self, v: E) -> Self {
        self.cons_metered(v, &mut Unmetered)
    }

    /// Counts one step per node visited, the final `Leaf` included.
    pub fn cons_metered<M: Meter>(&self, v: E, m: &mut M) -> Self {
        BraunSeq {
            len: self.len + 1,
            tree: self.tree.cons(v, m),
        }
    }

    pub fn first(&self) -> Result<&E> {
        self.nonempty("first")?;
        self.access(0)
    }

    pub fn rest(&self) -> Result<Self> {
        self.rest_metered(&mut Unmetered)
    }

    pub fn rest_metered<M: Meter>(&self, m: &mut M) -> Result<Self> {
        self.nonempty("rest")?;
        Ok(BraunSeq {
            len: self.len - 1,
            tree: self.tree.rest(m),
        })
    }
}

impl<E: Clone> FromIterator<E> for BraunSeq<E> {
    fn from_iter<I: IntoIterator<Item = E>>(iter: I) -> Self {
        BraunSeq::from_list(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::costmeter::count;

    fn c(i: CdIndex) -> CdIndex {
        CdIndex::C(Arc::new(i))
    }

    fn d(i: CdIndex) -> CdIndex {
        CdIndex::D(Arc::new(i))
    }

    #[test]
    fn cd_numerals() {
        assert_eq!(CdIndex::from_u64(0), CdIndex::Z);
        assert_eq!(CdIndex::from_u64(1), c(CdIndex::Z));
        assert_eq!(CdIndex::from_u64(2), d(CdIndex::Z));
        assert_eq!(CdIndex::from_u64(5), c(d(CdIndex::Z)));
        assert_eq!(cd_to_int(&cd_from_int(997).unwrap()), Ok(997));
        assert!(matches!(cd_from_int(-1), Err(Error::Domain(_))));
        for i in 0..200 {
            assert_eq!(CdIndex::from_u64(i).digits(), cd_digit_count(i));
        }
    }

    #[test]
    fn access_examples() {
        let s = BraunSeq::from_list(['x']);
        assert_eq!(s.access(0), Ok(&'x'));
        let s = BraunSeq::from_list(['a', 'b', 'c', 'd', 'e']);
        assert_eq!(s.access(3), Ok(&'d'));
        assert_eq!(s.access_cd(&CdIndex::from_u64(3)), Ok(&'d'));
        let s: BraunSeq<u32> = (0..100).collect();
        assert_eq!(s.access(64), Ok(&64));
        assert_eq!(s.access_cd(&CdIndex::from_u64(64)), Ok(&64));
        assert_eq!(s.access(100), Err(Error::Index { index: 100, len: 100 }));
        assert_eq!(
            s.access_cd(&CdIndex::from_u64(100)),
            Err(Error::Index { index: 100, len: 100 })
        );
    }

    #[test]
    fn update_examples() {
        let s = BraunSeq::from_list(['a']);
        assert_eq!(s.update(0, 'z').unwrap().to_list(), vec!['z']);
        let s = BraunSeq::from_list(['a', 'b', 'c']);
        let t = s.update(1, 'z').unwrap();
        assert_eq!(t.to_list(), vec!['a', 'z', 'c']);
        assert_eq!(s.to_list(), vec!['a', 'b', 'c']);
        assert!(matches!(s.update(3, 'q'), Err(Error::Index { .. })));
    }

    #[test]
    fn deque_front() {
        let s = BraunSeq::new().cons('x');
        assert_eq!(s.to_list(), vec!['x']);
        assert_eq!(s.first(), Ok(&'x'));
        let s = BraunSeq::from_list(['a', 'b', 'c', 'd']);
        assert_eq!(s.rest().unwrap().to_list(), vec!['b', 'c', 'd']);
        let e: BraunSeq<char> = BraunSeq::new();
        assert!(matches!(e.first(), Err(Error::Domain(_))));
        assert!(matches!(e.rest(), Err(Error::Domain(_))));
    }

    #[test]
    fn depth_examples() {
        assert_eq!(BraunSeq::<u8>::new().depth(), 0);
        assert_eq!(BraunSeq::from_list([1]).depth(), 1);
        assert_eq!(BraunSeq::from_list(0..7).depth(), 3);
        assert_eq!(BraunSeq::from_list(0..8).depth(), 4);
    }

    #[test]
    fn access_steps_equal_digits() {
        let s: BraunSeq<u64> = (0..300).collect();
        for i in 0..300 {
            let (_, steps) = count(|m| s.access_metered(i, m).copied());
            assert_eq!(steps.get(), cd_digit_count(i));
        }
    }

    #[test]
    fn tree_is_braun_shaped() {
        for n in 0..70 {
            let s: BraunSeq<usize> = (0..n).collect();
            assert_eq!(s.tree().check_shape(), Some(n));
            assert_eq!(s.len(), n);
        }
    }
}
