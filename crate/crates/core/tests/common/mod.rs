//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the library's semantics; partitions are plain column-height vectors.

#![allow(dead_code)]

use updown::{Kind, Letter, Word};

/// Column heights, column 1 first. Trailing zeros are allowed.
pub type Columns = Vec<usize>;

fn col(c: &[usize], i: usize) -> usize {
    c.get(i - 1).copied().unwrap_or(0)
}

/// Adds or removes one box in column `i`, or `None` if the result is not a
/// partition.
pub fn step_columns(c: &[usize], l: Letter) -> Option<Columns> {
    let i = l.index() as usize;
    let mut out = c.to_vec();
    if out.len() < i + 1 {
        out.resize(i + 1, 0);
    }
    match l.kind() {
        Kind::Up => {
            if i > 1 && col(c, i - 1) <= col(c, i) {
                return None;
            }
            out[i - 1] += 1;
        }
        Kind::Down => {
            if col(c, i) <= col(c, i + 1) {
                return None;
            }
            out[i - 1] -= 1;
        }
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    Some(out)
}

/// Rightmost letter first.
pub fn act(c: &[usize], x: &Word) -> Option<Columns> {
    let mut cur: Columns = c.to_vec();
    while cur.last() == Some(&0) {
        cur.pop();
    }
    for &l in x.iter().rev() {
        cur = step_columns(&cur, l)?;
    }
    Some(cur)
}

/// Every column vector on columns 1..=n+1 whose successive differences
/// (the last column counted against an empty one) lie in 0..=c.
pub fn all_profiles(n: usize, c: usize) -> Vec<Columns> {
    let mut out = Vec::new();
    let mut diffs = vec![0usize; n + 1];
    fn rec(k: usize, c: usize, diffs: &mut Vec<usize>, out: &mut Vec<Columns>) {
        if k == diffs.len() {
            let mut cols = vec![0usize; diffs.len()];
            let mut acc = 0;
            for j in (0..diffs.len()).rev() {
                acc += diffs[j];
                cols[j] = acc;
            }
            out.push(cols);
            return;
        }
        for d in 0..=c {
            diffs[k] = d;
            rec(k + 1, c, diffs, out);
        }
    }
    rec(0, c, &mut diffs, &mut out);
    out
}

/// Compares the two actions on the complete profile set for the pair.
pub fn brute_equal(x: &Word, y: &Word) -> bool {
    let n = x.max_index().max(y.max_index()) as usize + 1;
    let c = x.len().max(y.len());
    all_profiles(n, c).iter().all(|p| act(p, x) == act(p, y))
}

/// w_i for i = 1..=n (index 0 unused).
pub fn brute_weight(x: &Word, n: usize) -> Vec<i64> {
    let mut w = vec![0i64; n + 2];
    for l in x.iter() {
        w[l.index() as usize] += if l.is_up() { 1 } else { -1 };
    }
    w
}

/// α_i for i = 1..=n, by recomputing the weight of every suffix.
pub fn brute_alpha(x: &Word, n: usize) -> Vec<i64> {
    let mut a = vec![0i64; n + 1];
    for start in 0..=x.len() {
        let w = brute_weight(&x.suffix(start), n);
        for i in 1..=n {
            a[i] = a[i].max(w[i + 1] - w[i]);
        }
    }
    a
}

/// Dense comparison of the library fingerprint with the brute one.
pub fn fingerprint_matches(x: &Word, n: usize) -> bool {
    let fp = updown::fingerprint(x);
    let (w, a) = (brute_weight(x, n), brute_alpha(x, n));
    (1..=n).all(|i| fp.weight.get(i as u32) == w[i] && fp.alpha.get(i as u32) == a[i])
        && fp.weight.support_max() as usize <= n
        && fp.alpha.support_max() as usize <= n
}

/// All words with letters 1..=max_index (both kinds) and length ≤ max_len.
pub fn all_words(max_index: u32, max_len: usize) -> Vec<Word> {
    let alphabet: Vec<Letter> = (1..=max_index)
        .flat_map(|i| [Letter::up(i), Letter::down(i)])
        .collect();
    words_over(&alphabet, max_len)
}

pub fn words_over(alphabet: &[Letter], max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Vec::<Letter>::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                alphabet.iter().map(move |&l| {
                    let mut v = w.clone();
                    v.push(l);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned().map(Word::new));
    }
    out
}

pub fn w(text: &str) -> Word {
    updown::parse_word(text).unwrap()
}

/// u_t and d_t on the chain 0..=rho, rightmost first.
pub fn chain_act(rho: u32, pos: u32, x: &Word) -> Option<u32> {
    let mut p = pos;
    for l in x.iter().rev() {
        if l.is_up() {
            if p == rho {
                return None;
            }
            p += 1;
        } else {
            if p == 0 {
                return None;
            }
            p -= 1;
        }
    }
    Some(p)
}
