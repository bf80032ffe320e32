//! Comparisons between integer sequences.

/// Weak (prefix-sum) majorization: both sequences sorted descending, the
/// shorter one padded with zeros; true iff every prefix sum of `a` is at
/// least the matching prefix sum of `b`.
pub fn majorizes(a: &[usize], b: &[usize]) -> bool {
    let len = a.len().max(b.len());
    let sorted = |s: &[usize]| {
        let mut v = s.to_vec();
        v.sort_unstable_by(|x, y| y.cmp(x));
        v.resize(len, 0);
        v
    };
    let (a, b) = (sorted(a), sorted(b));
    let (mut sa, mut sb) = (0, 0);
    a.iter().zip(&b).all(|(x, y)| {
        sa += x;
        sb += y;
        sa >= sb
    })
}

/// `a` is dominated by `b`: equal length, and pointwise `a[i] <= b[i]`
/// once both are sorted ascending.
pub fn dominated<T: Ord + Copy>(a: &[T], b: &[T]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_unstable();
    b.sort_unstable();
    a.iter().zip(&b).all(|(x, y)| x <= y)
}
