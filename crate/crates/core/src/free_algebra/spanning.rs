use crate::free_algebra::multilinear::MultilinearPoly;
use crate::kernel::perm::next_permutation;
use crate::kernel::{factorial, ordered_set_partitions_min2, Scalar};

/// Left-normed commutator of distinct variables as signed words.
fn commutator_words(letters: &[u32]) -> Vec<(Vec<u32>, i64)> {
    let mut acc: Vec<(Vec<u32>, i64)> = vec![(vec![letters[0]], 1)];
    for &b in &letters[1..] {
        let mut next = Vec::with_capacity(acc.len() * 2);
        for (w, c) in &acc {
            let mut right = w.clone();
            right.push(b);
            next.push((right, *c));
            let mut left = vec![b];
            left.extend_from_slice(w);
            next.push((left, -*c));
        }
        acc = next;
    }
    acc
}

/// Product of commutators over disjoint blocks, as a vector in `P_n`.
fn product_of_commutators<S: Scalar>(n: usize, blocks: &[Vec<u32>]) -> MultilinearPoly<S> {
    let mut words: Vec<(Vec<u32>, i64)> = vec![(Vec::new(), 1)];
    for b in blocks {
        let factor = commutator_words(b);
        let mut next = Vec::with_capacity(words.len() * factor.len());
        for (w, c) in &words {
            for (v, d) in &factor {
                let mut u = w.clone();
                u.extend_from_slice(v);
                next.push((u, c * d));
            }
        }
        words = next;
    }
    let mut coeffs = vec![0i64; factorial(n) as usize];
    for (w, c) in words {
        coeffs[MultilinearPoly::<S>::rank_of(&w)] += c;
    }
    MultilinearPoly::from_coeffs(n, coeffs.into_iter().map(S::from_i64).collect())
        .expect("width is n!")
}

fn for_each_arrangement(blocks: &[Vec<usize>], fixed_first: bool, emit: &mut dyn FnMut(&[Vec<u32>])) {
    fn rec(
        blocks: &[Vec<usize>],
        fixed_first: bool,
        k: usize,
        cur: &mut Vec<Vec<u32>>,
        emit: &mut dyn FnMut(&[Vec<u32>]),
    ) {
        if k == blocks.len() {
            emit(cur);
            return;
        }
        let mut b: Vec<u32> = blocks[k].iter().map(|&v| v as u32).collect();
        let head = if fixed_first {
            // largest element leads, the rest in every order
            let max_pos = b.iter().enumerate().max_by_key(|(_, v)| **v).map(|(i, _)| i).unwrap_or(0);
            let m = b.remove(max_pos);
            Some(m)
        } else {
            None
        };
        b.sort_unstable();
        loop {
            let mut arr = Vec::with_capacity(b.len() + 1);
            arr.extend(head);
            arr.extend_from_slice(&b);
            cur.push(arr);
            rec(blocks, fixed_first, k + 1, cur, emit);
            cur.pop();
            if !next_permutation(&mut b) {
                break;
            }
        }
    }
    rec(blocks, fixed_first, 0, &mut Vec::new(), emit);
}

/// Spanning set of `Γ_n`: for every ordered set partition of `{1..n}` into
/// blocks of size ≥ 2 and every arrangement of each block, the product of
/// the left-normed block commutators.
pub fn proper_spanning_set<S: Scalar>(n: usize) -> Vec<MultilinearPoly<S>> {
    let mut out = Vec::new();
    for blocks in ordered_set_partitions_min2(n) {
        for_each_arrangement(&blocks, false, &mut |arr| {
            out.push(product_of_commutators(n, arr));
        });
    }
    out
}

/// A basis of `Γ_n` of size `derangements(n)`.
///
/// Blocks of a set partition are ordered by their largest element and every
/// block commutator starts with that largest element. The lexicographically
/// largest word of such a product is the concatenation `x_max a_2 ⋯ a_p` of
/// the block arrangements, whose block starts are exactly its left-to-right
/// maxima, so distinct elements have distinct leading words and the family
/// is independent.
pub fn proper_basis<S: Scalar>(n: usize) -> Vec<MultilinearPoly<S>> {
    let mut out = Vec::new();
    for blocks in ordered_set_partitions_min2(n) {
        let maxes: Vec<usize> = blocks.iter().map(|b| *b.iter().max().unwrap()).collect();
        if maxes.windows(2).any(|w| w[0] > w[1]) {
            continue;
        }
        for_each_arrangement(&blocks, true, &mut |arr| {
            out.push(product_of_commutators(n, arr));
        });
    }
    out
}
