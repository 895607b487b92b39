//! Suffix array and LCP array construction for integer texts.

const EMPTY: u32 = u32::MAX;

/// Suffix array of `s`, whose letters lie in `0..=upper`, by induced
/// sorting (SA-IS) in `O(n + upper)`. A proper suffix sorts before the
/// suffixes it prefixes.
pub(crate) fn suffix_array<T: Copy + Ord + Into<u32>>(s: &[T], upper: u32) -> Vec<u32> {
    assert!(s.len() < EMPTY as usize, "text too long");
    sa_is(s, upper as usize)
}

fn sa_naive<T: Ord>(s: &[T]) -> Vec<u32> {
    let mut sa: Vec<u32> = (0..s.len() as u32).collect();
    sa.sort_unstable_by(|&a, &b| s[a as usize..].cmp(&s[b as usize..]));
    sa
}

fn sa_is<T: Copy + Ord + Into<u32>>(s: &[T], upper: usize) -> Vec<u32> {
    let n = s.len();
    if n < 16 {
        return sa_naive(s);
    }

    // `ls[i]`: suffix i is S-type (smaller than suffix i + 1). The last
    // suffix is L-type against the implicit terminator.
    let mut ls = vec![false; n];
    for i in (0..n - 1).rev() {
        ls[i] = if s[i] == s[i + 1] { ls[i + 1] } else { s[i] < s[i + 1] };
    }
    // Bucket boundaries: `sum_l[c]` is where L-type suffixes starting with
    // `c` begin, `sum_s[c]` where S-type ones do.
    let mut sum_l = vec![0usize; upper + 2];
    let mut sum_s = vec![0usize; upper + 2];
    for i in 0..n {
        if ls[i] {
            sum_l[s[i].into() as usize + 1] += 1;
        } else {
            sum_s[s[i].into() as usize] += 1;
        }
    }
    for c in 0..=upper {
        sum_s[c] += sum_l[c];
        sum_l[c + 1] += sum_s[c];
    }

    let is_lms = |i: usize| i > 0 && !ls[i - 1] && ls[i];
    let mut sa = vec![EMPTY; n];
    let mut buf = vec![0usize; upper + 2];
    let mut induce = |sa: &mut [u32], lms: &[u32]| {
        sa.fill(EMPTY);
        buf.copy_from_slice(&sum_s);
        for &d in lms {
            let c = s[d as usize].into() as usize;
            sa[buf[c]] = d;
            buf[c] += 1;
        }
        buf.copy_from_slice(&sum_l);
        let c = s[n - 1].into() as usize;
        sa[buf[c]] = (n - 1) as u32;
        buf[c] += 1;
        // Types are recovered from the text instead of `ls`, which keeps
        // the reads next to each other. Only LMS and L-type suffixes are in
        // `sa` during this scan, and for those `v - 1` is L-type exactly
        // when `s[v - 1] >= s[v]`.
        for i in 0..n {
            let v = sa[i];
            if v != EMPTY && v >= 1 {
                let (prev, cur) = (s[v as usize - 1].into(), s[v as usize].into());
                if prev >= cur {
                    let c = prev as usize;
                    sa[buf[c]] = v - 1;
                    buf[c] += 1;
                }
            }
        }
        // Here `v` is S-type exactly when it sits in the S-part of its
        // bucket, and `v - 1` is S-type when `s[v - 1] < s[v]`, or when the
        // letters are equal and `v` is S-type.
        buf.copy_from_slice(&sum_l);
        for i in (0..n).rev() {
            let v = sa[i];
            if v != EMPTY && v >= 1 {
                let (prev, cur) = (s[v as usize - 1].into(), s[v as usize].into());
                if prev < cur || (prev == cur && i >= sum_s[cur as usize]) {
                    let c = prev as usize + 1;
                    buf[c] -= 1;
                    sa[buf[c]] = v - 1;
                }
            }
        }
    };

    let lms: Vec<u32> = (1..n).filter(|&i| is_lms(i)).map(|i| i as u32).collect();
    let m = lms.len();
    induce(&mut sa, &lms);
    if m == 0 {
        return sa;
    }

    // Name the LMS substrings in sorted order and recurse on the names.
    // LMS positions are at least two apart, so `i / 2` indexes them
    // uniquely in a half-length table.
    let sorted_lms: Vec<u32> = sa.iter().copied().filter(|&v| is_lms(v as usize)).collect();
    let end = |i: usize| (i + 1..n).find(|&j| is_lms(j)).unwrap_or(n);
    let mut names = vec![EMPTY; n / 2 + 1];
    let mut name = 0u32;
    names[sorted_lms[0] as usize / 2] = 0;
    let (mut prev, mut prev_end) = (sorted_lms[0] as usize, end(sorted_lms[0] as usize));
    for &cur in &sorted_lms[1..] {
        let cur = cur as usize;
        let cur_end = end(cur);
        let mut same = prev_end - prev == cur_end - cur;
        if same {
            let (mut l, mut r) = (prev, cur);
            while l < prev_end && s[l] == s[r] {
                l += 1;
                r += 1;
            }
            same = l < n && r < n && s[l] == s[r];
        }
        if !same {
            name += 1;
        }
        names[cur / 2] = name;
        (prev, prev_end) = (cur, cur_end);
    }
    drop(sorted_lms);
    let rec: Vec<u32> = names.into_iter().filter(|&c| c != EMPTY).collect();

    let rec_sa = if name as usize + 1 == m {
        // All names distinct: the order is already known.
        let mut rec_sa = vec![0u32; m];
        for (k, &c) in rec.iter().enumerate() {
            rec_sa[c as usize] = k as u32;
        }
        rec_sa
    } else {
        sa_is(&rec, name as usize)
    };
    drop(rec);
    let sorted_lms: Vec<u32> = rec_sa.iter().map(|&k| lms[k as usize]).collect();
    induce(&mut sa, &sorted_lms);
    sa
}

/// `lcp[i]` is the length of the longest common prefix of the suffixes
/// `sa[i - 1]` and `sa[i]`; `lcp[0] = 0`. Computed through the permuted
/// array (Φ method), which reads `sa` and the text mostly in order.
pub(crate) fn lcp_array<T: Eq>(s: &[T], sa: &[u32]) -> Vec<u32> {
    let n = s.len();
    if n == 0 {
        return Vec::new();
    }
    let mut phi = vec![EMPTY; n];
    for i in 1..n {
        phi[sa[i] as usize] = sa[i - 1];
    }
    // Reuse `phi` for the permuted LCP values.
    let mut l = 0usize;
    for i in 0..n {
        let j = phi[i];
        if j == EMPTY {
            phi[i] = 0;
            l = 0;
            continue;
        }
        let j = j as usize;
        while i + l < n && j + l < n && s[i + l] == s[j + l] {
            l += 1;
        }
        phi[i] = l as u32;
        l = l.saturating_sub(1);
    }
    sa.iter().map(|&p| phi[p as usize]).collect()
}
