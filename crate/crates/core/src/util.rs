/// All `k`-element subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    for i in start..n {
        if n - i < k - cur.len() {
            break;
        }
        cur.push(i);
        rec(i + 1, n, k, cur, out);
        cur.pop();
    }
}
