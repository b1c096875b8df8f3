//! Set-partition enumeration by restricted growth strings.
//!
//! A partition of {0..k-1} is encoded as the assignment `a` with `a[i]` the block
//! of element i, where `a[0] = 0` and `a[i] <= max(a[..i]) + 1`. Every partition
//! is produced exactly once.

/// Call `f` with the block assignment of every set partition of {0..k-1}.
/// For k = 0 the single empty partition is reported once.
pub fn for_each_set_partition(k: usize, mut f: impl FnMut(&[u8])) {
    let mut a = vec![0u8; k];
    if k == 0 {
        f(&a);
        return;
    }
    rec(&mut a, 1, 0, &mut f);
}

fn rec(a: &mut [u8], i: usize, max_block: u8, f: &mut impl FnMut(&[u8])) {
    if i == a.len() {
        f(a);
        return;
    }
    for v in 0..=(max_block + 1) {
        a[i] = v;
        rec(a, i + 1, max_block.max(v), f);
    }
}

/// Number of blocks of an assignment produced by [`for_each_set_partition`].
pub fn block_count(assignment: &[u8]) -> usize {
    if assignment.is_empty() {
        0
    } else {
        *assignment.iter().max().unwrap() as usize + 1
    }
}
