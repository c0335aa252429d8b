/// Ordered sequences of disjoint blocks covering `{1..n}`, every block of size ≥ 2.
///
/// The first block is chosen among subsets of the remaining points in
/// ascending bitmask order, then the rest is enumerated recursively, so the
/// listing is deterministic. Blocks are returned sorted ascending.
pub fn ordered_set_partitions_min2(n: usize) -> Vec<Vec<Vec<usize>>> {
    if n < 2 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let all: Vec<usize> = (1..=n).collect();
    rec(&all, &mut Vec::new(), &mut out);
    out
}

fn rec(remaining: &[usize], prefix: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
    if remaining.is_empty() {
        out.push(prefix.clone());
        return;
    }
    let r = remaining.len();
    for mask in 1u64..(1u64 << r) {
        let size = mask.count_ones() as usize;
        if size < 2 || (r - size != 0 && r - size < 2) {
            continue;
        }
        let (block, rest): (Vec<usize>, Vec<usize>) = {
            let mut b = Vec::new();
            let mut rest = Vec::new();
            for (i, &x) in remaining.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    b.push(x);
                } else {
                    rest.push(x);
                }
            }
            (b, rest)
        };
        prefix.push(block);
        rec(&rest, prefix, out);
        prefix.pop();
    }
}

/// All ways to distribute `items` into `k` labelled blocks, each block
/// receiving its elements as an ordered word. Blocks may be empty only when
/// `allow_empty` is set. Words are listed in deterministic order.
pub fn ordered_word_distributions(items: &[usize], k: usize, allow_empty: bool) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    if k == 0 {
        if items.is_empty() {
            out.push(Vec::new());
        }
        return out;
    }
    // Every distribution is a permutation of the items cut into k consecutive
    // pieces; enumerate arrangements and cut points.
    let mut arr: Vec<usize> = items.to_vec();
    arr.sort_unstable();
    loop {
        cuts(&arr, k, allow_empty, 0, &mut Vec::new(), &mut out);
        if !crate::kernel::perm::next_permutation(&mut arr) {
            break;
        }
    }
    out
}

fn cuts(
    arr: &[usize],
    k: usize,
    allow_empty: bool,
    start: usize,
    acc: &mut Vec<Vec<usize>>,
    out: &mut Vec<Vec<Vec<usize>>>,
) {
    if acc.len() == k - 1 {
        let last = &arr[start..];
        if last.is_empty() && !allow_empty {
            return;
        }
        acc.push(last.to_vec());
        out.push(acc.clone());
        acc.pop();
        return;
    }
    let min_len = if allow_empty { 0 } else { 1 };
    for end in start + min_len..=arr.len() {
        acc.push(arr[start..end].to_vec());
        cuts(arr, k, allow_empty, end, acc, out);
        acc.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert!(ordered_set_partitions_min2(1).is_empty());
        assert_eq!(ordered_set_partitions_min2(2), vec![vec![vec![1, 2]]]);
        assert_eq!(ordered_set_partitions_min2(3), vec![vec![vec![1, 2, 3]]]);
        let four = ordered_set_partitions_min2(4);
        assert_eq!(four.len(), 7);
        assert_eq!(four.iter().filter(|p| p.len() == 2).count(), 6);
        assert_eq!(four[0], vec![vec![1, 2], vec![3, 4]]);
        assert_eq!(four[6], vec![vec![1, 2, 3, 4]]);
    }

    #[test]
    fn brute_force_count() {
        // Count ordered partitions with blocks ≥ 2 by assigning block labels.
        fn brute(n: usize) -> usize {
            let mut total = 0;
            for k in 1..=n / 2 {
                // surjections onto k labels with every fibre ≥ 2
                let mut labels = vec![0usize; n];
                loop {
                    let mut sizes = vec![0; k];
                    for &l in &labels {
                        sizes[l] += 1;
                    }
                    if sizes.iter().all(|&s| s >= 2) {
                        total += 1;
                    }
                    let mut i = 0;
                    while i < n {
                        labels[i] += 1;
                        if labels[i] < k {
                            break;
                        }
                        labels[i] = 0;
                        i += 1;
                    }
                    if i == n {
                        break;
                    }
                }
            }
            total
        }
        for n in 2..=7 {
            assert_eq!(ordered_set_partitions_min2(n).len(), brute(n), "n={n}");
        }
    }

    #[test]
    fn word_distributions() {
        // 3 items into 2 nonempty ordered words: 3! arrangements × 2 cut points
        assert_eq!(ordered_word_distributions(&[1, 2, 3], 2, false).len(), 12);
        // with empty words allowed: 3! × C(4,1)
        assert_eq!(ordered_word_distributions(&[1, 2, 3], 2, true).len(), 24);
        assert_eq!(ordered_word_distributions(&[], 2, true), vec![vec![vec![], vec![]]]);
        assert!(ordered_word_distributions(&[], 2, false).is_empty());
        assert_eq!(ordered_word_distributions(&[4], 1, false), vec![vec![vec![4]]]);
    }
}
