use std::fmt;

use super::PresentationError;

/// A word in a free group: `(generator, ±1)` letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GroupWord {
    letters: Vec<(usize, i8)>,
}

impl GroupWord {
    pub fn new(letters: Vec<(usize, i8)>) -> Self {
        debug_assert!(letters.iter().all(|&(_, e)| e == 1 || e == -1));
        GroupWord { letters }
    }

    pub fn gen(g: usize) -> Self {
        GroupWord { letters: vec![(g, 1)] }
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> GroupWord {
        GroupWord { letters: self.letters.iter().rev().map(|&(g, e)| (g, -e)).collect() }
    }

    pub fn concat(&self, other: &GroupWord) -> GroupWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        GroupWord { letters }.free_reduce()
    }

    pub fn occurrences(&self, g: usize) -> usize {
        self.letters.iter().filter(|&&(h, _)| h == g).count()
    }

    pub fn free_reduce(&self) -> GroupWord {
        let mut out: Vec<(usize, i8)> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            match out.last() {
                Some(&(g, e)) if g == l.0 && e == -l.1 => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        GroupWord { letters: out }
    }

    /// Free and cyclic reduction.
    pub fn cyclic_reduce(&self) -> GroupWord {
        let mut w = self.free_reduce().letters;
        while w.len() >= 2 {
            let (f, l) = (w[0], w[w.len() - 1]);
            if f.0 == l.0 && f.1 == -l.1 {
                w.pop();
                w.remove(0);
            } else {
                break;
            }
        }
        GroupWord { letters: w }
    }

    /// Cyclic rotation starting at letter `k`.
    pub fn rotate(&self, k: usize) -> GroupWord {
        let mut letters = self.letters.clone();
        letters.rotate_left(k);
        GroupWord { letters }
    }

    /// Smallest rotation of the cyclically reduced word or its inverse; two
    /// relators with the same key define the same normal closure.
    pub fn cyclic_key(&self) -> GroupWord {
        let w = self.cyclic_reduce();
        let inv = w.inverse();
        (0..w.len().max(1)).flat_map(|k| [w.rotate(k), inv.rotate(k)]).min().unwrap_or_default()
    }

    pub fn substitute(&self, g: usize, w: &GroupWord) -> GroupWord {
        let winv = w.inverse();
        let mut letters = Vec::new();
        for &(h, e) in &self.letters {
            if h == g {
                letters.extend_from_slice(if e > 0 { &w.letters } else { &winv.letters });
            } else {
                letters.push((h, e));
            }
        }
        GroupWord { letters }.free_reduce()
    }

    pub fn map_generators(&self, f: impl Fn(usize) -> usize) -> GroupWord {
        GroupWord { letters: self.letters.iter().map(|&(g, e)| (f(g), e)).collect() }
    }

    /// Evaluates the word in a group given images and inverse images.
    pub fn evaluate<T: Clone>(&self, identity: T, images: &[T], inverses: &[T], mul: impl Fn(&T, &T) -> T) -> T {
        self.letters.iter().fold(identity, |acc, &(g, e)| mul(&acc, if e > 0 { &images[g] } else { &inverses[g] }))
    }

    pub fn display(&self, names: &[String]) -> String {
        if self.letters.is_empty() {
            return "1".to_string();
        }
        self.letters
            .iter()
            .map(|&(g, e)| if e > 0 { names[g].clone() } else { format!("{}^-1", names[g]) })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parses whitespace-separated letters `name`, `name^-1` or `name^k`.
    pub fn parse(text: &str, names: &[String]) -> Result<GroupWord, PresentationError> {
        let mut letters = Vec::new();
        let text = text.trim();
        if text == "1" || text.is_empty() {
            return Ok(GroupWord::default());
        }
        for tok in text.split_whitespace() {
            let (name, exp) = match tok.split_once('^') {
                Some((n, e)) => (
                    n,
                    e.trim_matches(|c| c == '(' || c == ')')
                        .parse::<i64>()
                        .map_err(|_| PresentationError::MalformedWord(tok.to_string()))?,
                ),
                None => (tok, 1),
            };
            let g = names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| PresentationError::UnknownGenerator(name.to_string()))?;
            let e = if exp < 0 { -1 } else { 1 };
            for _ in 0..exp.unsigned_abs() {
                letters.push((g, e));
            }
        }
        Ok(GroupWord { letters })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QuandleOp {
    Star,
    StarInv,
}

impl QuandleOp {
    pub fn inverse(self) -> QuandleOp {
        match self {
            QuandleOp::Star => QuandleOp::StarInv,
            QuandleOp::StarInv => QuandleOp::Star,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            QuandleOp::Star => "*",
            QuandleOp::StarInv => "*^-1",
        }
    }
}

/// A word in the free quandle: a binary tree of `*` and `*⁻¹` over generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QuandleWord {
    Gen(usize),
    Apply(Box<QuandleWord>, QuandleOp, Box<QuandleWord>),
}

impl QuandleWord {
    pub fn gen(g: usize) -> Self {
        QuandleWord::Gen(g)
    }

    pub fn apply(l: QuandleWord, op: QuandleOp, r: QuandleWord) -> Self {
        QuandleWord::Apply(Box::new(l), op, Box::new(r))
    }

    pub fn op(l: QuandleWord, r: QuandleWord) -> Self {
        Self::apply(l, QuandleOp::Star, r)
    }

    pub fn op_inv(l: QuandleWord, r: QuandleWord) -> Self {
        Self::apply(l, QuandleOp::StarInv, r)
    }

    pub fn as_gen(&self) -> Option<usize> {
        match self {
            QuandleWord::Gen(g) => Some(*g),
            _ => None,
        }
    }

    pub fn contains(&self, g: usize) -> bool {
        match self {
            QuandleWord::Gen(h) => *h == g,
            QuandleWord::Apply(l, _, r) => l.contains(g) || r.contains(g),
        }
    }

    /// Number of generator leaves.
    pub fn size(&self) -> usize {
        match self {
            QuandleWord::Gen(_) => 1,
            QuandleWord::Apply(l, _, r) => l.size() + r.size(),
        }
    }

    pub fn generators(&self, out: &mut Vec<usize>) {
        match self {
            QuandleWord::Gen(g) => {
                if !out.contains(g) {
                    out.push(*g)
                }
            }
            QuandleWord::Apply(l, _, r) => {
                l.generators(out);
                r.generators(out);
            }
        }
    }

    pub fn substitute(&self, g: usize, w: &QuandleWord) -> QuandleWord {
        match self {
            QuandleWord::Gen(h) if *h == g => w.clone(),
            QuandleWord::Gen(_) => self.clone(),
            QuandleWord::Apply(l, op, r) => QuandleWord::apply(l.substitute(g, w), *op, r.substitute(g, w)),
        }
    }

    pub fn map_generators(&self, f: &impl Fn(usize) -> usize) -> QuandleWord {
        match self {
            QuandleWord::Gen(g) => QuandleWord::Gen(f(*g)),
            QuandleWord::Apply(l, op, r) => QuandleWord::apply(l.map_generators(f), *op, r.map_generators(f)),
        }
    }

    /// Cancels `(w *^ε y) *^-ε y → w`, which holds in every quandle.
    pub fn reduce(&self) -> QuandleWord {
        match self {
            QuandleWord::Gen(_) => self.clone(),
            QuandleWord::Apply(l, op, r) => {
                let (l, r) = (l.reduce(), r.reduce());
                if let QuandleWord::Apply(ll, op2, rr) = &l {
                    if *op2 == op.inverse() && **rr == r {
                        return (**ll).clone();
                    }
                }
                QuandleWord::apply(l, *op, r)
            }
        }
    }

    /// Evaluates the word with the given operation and its inverse.
    pub fn evaluate<T: Clone>(&self, values: &[T], op: &impl Fn(&T, &T) -> T, op_inv: &impl Fn(&T, &T) -> T) -> T {
        match self {
            QuandleWord::Gen(g) => values[*g].clone(),
            QuandleWord::Apply(l, o, r) => {
                let (a, b) = (l.evaluate(values, op, op_inv), r.evaluate(values, op, op_inv));
                match o {
                    QuandleOp::Star => op(&a, &b),
                    QuandleOp::StarInv => op_inv(&a, &b),
                }
            }
        }
    }

    fn fmt_inner(&self, names: &[String], out: &mut String) {
        match self {
            QuandleWord::Gen(g) => out.push_str(&names[*g]),
            QuandleWord::Apply(l, op, r) => {
                for (i, side) in [l, r].into_iter().enumerate() {
                    if i == 1 {
                        out.push_str(op.symbol());
                    }
                    match **side {
                        QuandleWord::Gen(_) => side.fmt_inner(names, out),
                        _ => {
                            out.push('(');
                            side.fmt_inner(names, out);
                            out.push(')');
                        }
                    }
                }
            }
        }
    }

    /// Infix form; compound words are wrapped in parentheses, e.g. `(a*(c*b))`.
    pub fn display(&self, names: &[String]) -> String {
        let mut s = String::new();
        self.fmt_inner(names, &mut s);
        match self {
            QuandleWord::Gen(_) => s,
            _ => format!("({})", s),
        }
    }
}

impl fmt::Display for QuandleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut n = Vec::new();
        self.generators(&mut n);
        let max = n.iter().copied().max().unwrap_or(0);
        let names: Vec<String> = (0..=max).map(|i| format!("x{}", i)).collect();
        f.write_str(&self.display(&names))
    }
}
