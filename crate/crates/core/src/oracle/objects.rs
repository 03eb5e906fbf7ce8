//! The combinatorial families, each grown by inserting its largest element.
//!
//! Every object on `[m+1]` arises from exactly one object on `[m]` by one
//! insertion (remove the largest element to invert), so walking the
//! insertion tree lists each object once.

use std::fmt::Write;

use super::Stat;

pub(crate) trait Growth: Clone + Send + Sync {
    /// The unique object of size 0.
    fn empty() -> Self;
    /// Calls `f` on every object obtained by inserting `m + 1` into `self`,
    /// where `self` has size `m`.
    fn grow(&self, m: usize, f: &mut dyn FnMut(Self));
    fn stats(&self, out: &mut Vec<u32>);
    fn encode(&self) -> String;
}

fn word(w: &[u8]) -> String {
    let sep = w.iter().any(|&v| v > 9);
    let mut s = String::new();
    for (i, v) in w.iter().enumerate() {
        if sep && i > 0 {
            s.push(',');
        }
        write!(s, "{v}").unwrap();
    }
    s
}

// ---------------------------------------------------------------- permutations

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Perm(pub Vec<u8>);

pub(crate) const PERM_STATS: &[Stat] = &[Stat::Des, Stat::Exc, Stat::Cyc, Stat::Cdes, Stat::Udrun];

impl Perm {
    pub fn des(&self) -> u32 {
        self.0.windows(2).filter(|w| w[0] > w[1]).count() as u32
    }

    pub fn exc(&self) -> u32 {
        self.0.iter().enumerate().filter(|&(i, &v)| v as usize > i + 1).count() as u32
    }

    /// Cycles in standard form: smallest element first, ordered by first element.
    pub fn cycles(&self) -> Vec<Vec<u8>> {
        let n = self.0.len();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                cycle.push(j as u8);
                j = self.0[j - 1] as usize;
            }
            out.push(cycle);
        }
        out
    }

    pub fn cyc(&self) -> u32 {
        self.cycles().len() as u32
    }

    /// Descents inside the cycles of the standard cycle form.
    pub fn cdes(&self) -> u32 {
        self.cycles().iter().map(|c| c.windows(2).filter(|w| w[0] > w[1]).count() as u32).sum()
    }

    /// Maximal monotone runs of `0, π(1), …, π(n)`; 0 for the empty permutation.
    pub fn udrun(&self) -> u32 {
        if self.0.is_empty() {
            return 0;
        }
        let mut seq = Vec::with_capacity(self.0.len() + 1);
        seq.push(0u8);
        seq.extend_from_slice(&self.0);
        let mut runs = 1;
        for i in 1..seq.len() - 1 {
            let up_before = seq[i - 1] < seq[i];
            let up_after = seq[i] < seq[i + 1];
            if up_before != up_after {
                runs += 1;
            }
        }
        runs
    }

    pub fn from_cycles(n: usize, cycles: &[&[u8]]) -> Perm {
        let mut w = vec![0u8; n];
        for c in cycles {
            for (i, &a) in c.iter().enumerate() {
                w[a as usize - 1] = c[(i + 1) % c.len()];
            }
        }
        Perm(w)
    }
}

impl Growth for Perm {
    fn empty() -> Self {
        Perm(Vec::new())
    }

    fn grow(&self, m: usize, f: &mut dyn FnMut(Self)) {
        for pos in 0..=m {
            let mut w = self.0.clone();
            w.insert(pos, (m + 1) as u8);
            f(Perm(w));
        }
    }

    fn stats(&self, out: &mut Vec<u32>) {
        out.extend([self.des(), self.exc(), self.cyc(), self.cdes(), self.udrun()]);
    }

    fn encode(&self) -> String {
        word(&self.0)
    }
}

// ---------------------------------------------------------- signed permutations

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Signed(pub Vec<i8>);

pub(crate) const SIGNED_STATS: &[Stat] = &[Stat::DesB];

impl Signed {
    /// Descents of `0, σ(1), …, σ(n)`.
    pub fn des_b(&self) -> u32 {
        let mut prev = 0i8;
        let mut d = 0;
        for &v in &self.0 {
            if prev > v {
                d += 1;
            }
            prev = v;
        }
        d
    }
}

impl Growth for Signed {
    fn empty() -> Self {
        Signed(Vec::new())
    }

    fn grow(&self, m: usize, f: &mut dyn FnMut(Self)) {
        let v = (m + 1) as i8;
        for pos in 0..=m {
            for s in [v, -v] {
                let mut w = self.0.clone();
                w.insert(pos, s);
                f(Signed(w));
            }
        }
    }

    fn stats(&self, out: &mut Vec<u32>) {
        out.push(self.des_b());
    }

    fn encode(&self) -> String {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        parts.join(",")
    }
}

// --------------------------------------------------------- Stirling permutations

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Stirling(pub Vec<u8>);

pub(crate) const STIRLING_STATS: &[Stat] = &[Stat::Asc, Stat::Des, Stat::Plat, Stat::Ap, Stat::Fap];

/// Ascents, descents and plateaux of `0 w 0`.
fn padded_asc_des_plat(w: &[u8]) -> (u32, u32, u32) {
    let (mut asc, mut des, mut plat) = (0, 0, 0);
    let mut prev = 0u8;
    for &v in w.iter().chain(std::iter::once(&0)) {
        match prev.cmp(&v) {
            std::cmp::Ordering::Less => asc += 1,
            std::cmp::Ordering::Greater => des += 1,
            std::cmp::Ordering::Equal => plat += 1,
        }
        prev = v;
    }
    if w.is_empty() {
        // the lone comparison 0 = 0 is not a plateau of any word
        plat = 0;
    }
    (asc, des, plat)
}

impl Stirling {
    /// Indices `i` in `2..=2n-1` (1-based) with `σ_{i-1} < σ_i = σ_{i+1}`.
    pub fn ap(&self) -> u32 {
        let w = &self.0;
        (1..w.len().saturating_sub(1)).filter(|&i| w[i - 1] < w[i] && w[i] == w[i + 1]).count() as u32
    }

    pub fn fap(&self) -> u32 {
        let lead = self.0.len() >= 2 && self.0[0] == self.0[1];
        2 * self.ap() + u32::from(lead)
    }
}

impl Growth for Stirling {
    fn empty() -> Self {
        Stirling(Vec::new())
    }

    fn grow(&self, m: usize, f: &mut dyn FnMut(Self)) {
        let v = (m + 1) as u8;
        for pos in 0..=self.0.len() {
            let mut w = self.0.clone();
            w.splice(pos..pos, [v, v]);
            f(Stirling(w));
        }
    }

    fn stats(&self, out: &mut Vec<u32>) {
        let (asc, des, plat) = padded_asc_des_plat(&self.0);
        out.extend([asc, des, plat, self.ap(), self.fap()]);
    }

    fn encode(&self) -> String {
        word(&self.0)
    }
}

// -------------------------------------------------------------- list partitions

/// Lists sorted by their smallest element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Lists(pub Vec<Vec<u8>>);

pub(crate) const LIST_STATS: &[Stat] = &[Stat::Bk, Stat::Asc, Stat::Des, Stat::Val, Stat::Dd];

/// Valleys and double descents of `0 w 0`, at the entries of `w`.
fn val_dd(w: &[u8]) -> (u32, u32) {
    let (mut val, mut dd) = (0, 0);
    for i in 0..w.len() {
        let before = if i == 0 { 0 } else { w[i - 1] };
        let after = w.get(i + 1).copied().unwrap_or(0);
        if before > w[i] && w[i] < after {
            val += 1;
        }
        if before > w[i] && w[i] > after {
            dd += 1;
        }
    }
    (val, dd)
}

impl Growth for Lists {
    fn empty() -> Self {
        Lists(Vec::new())
    }

    fn grow(&self, m: usize, f: &mut dyn FnMut(Self)) {
        let v = (m + 1) as u8;
        for (b, list) in self.0.iter().enumerate() {
            for pos in 0..=list.len() {
                let mut next = self.0.clone();
                next[b].insert(pos, v);
                f(Lists(next));
            }
        }
        let mut next = self.0.clone();
        next.push(vec![v]);
        f(Lists(next));
    }

    fn stats(&self, out: &mut Vec<u32>) {
        let (mut asc, mut des, mut val, mut dd) = (0, 0, 0, 0);
        for list in &self.0 {
            let (a, d, _) = padded_asc_des_plat(list);
            let (v, e) = val_dd(list);
            asc += a;
            des += d;
            val += v;
            dd += e;
        }
        out.extend([self.0.len() as u32, asc, des, val, dd]);
    }

    fn encode(&self) -> String {
        self.0.iter().map(|l| format!("[{}]", word(l))).collect()
    }
}

// ------------------------------------------------------------- Stirling lists

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct StirlingLists(pub Vec<Vec<u8>>);

pub(crate) const STIRLING_LIST_STATS: &[Stat] = &[Stat::Bk, Stat::Asc, Stat::Plat, Stat::Des];

impl Growth for StirlingLists {
    fn empty() -> Self {
        StirlingLists(Vec::new())
    }

    fn grow(&self, m: usize, f: &mut dyn FnMut(Self)) {
        let v = (m + 1) as u8;
        for (b, block) in self.0.iter().enumerate() {
            for pos in 0..=block.len() {
                let mut next = self.0.clone();
                next[b].splice(pos..pos, [v, v]);
                f(StirlingLists(next));
            }
        }
        let mut next = self.0.clone();
        next.push(vec![v, v]);
        f(StirlingLists(next));
    }

    fn stats(&self, out: &mut Vec<u32>) {
        let (mut asc, mut des, mut plat) = (0, 0, 0);
        for block in &self.0 {
            let (a, d, p) = padded_asc_des_plat(block);
            asc += a;
            des += d;
            plat += p;
        }
        out.extend([self.0.len() as u32, asc, plat, des]);
    }

    fn encode(&self) -> String {
        self.0.iter().map(|b| format!("{{{}}}", word(b))).collect()
    }
}

// ------------------------------------------------------------------- forests

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    Binary,
    FullBinary,
    Ternary,
    FullTernary,
}

impl Flavor {
    /// Leaf weights (0 = x, 1 = y, 2 = z) of a root's children, by position.
    fn root_leaves(self) -> &'static [u8] {
        match self {
            Flavor::Binary | Flavor::Ternary => &[0],
            Flavor::FullBinary => &[0, 1],
            Flavor::FullTernary => &[0, 1, 2],
        }
    }

    /// Leaf weights of a non-root internal vertex's children, by position.
    fn inner_leaves(self) -> &'static [u8] {
        match self {
            Flavor::Binary | Flavor::FullBinary => &[0, 1],
            Flavor::Ternary => &[0, 1, 1],
            Flavor::FullTernary => &[0, 1, 2],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Flavor::Binary => "binary",
            Flavor::FullBinary => "full-binary",
            Flavor::Ternary => "ternary",
            Flavor::FullTernary => "full-ternary",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Token {
    Vertex(u8),
    Leaf(u8),
}

/// A forest in preorder, trees left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Forest {
    flavor: Flavor,
    tokens: Vec<Token>,
    trees: u32,
}

pub(crate) const FOREST_STATS: &[Stat] = &[Stat::Trees, Stat::Wx, Stat::Wy, Stat::Wz];

const WEIGHT_LETTERS: [char; 3] = ['x', 'y', 'z'];

impl Forest {
    pub fn empty(flavor: Flavor) -> Forest {
        Forest { flavor, tokens: Vec::new(), trees: 0 }
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn trees(&self) -> u32 {
        self.trees
    }

    /// Leaf counts by weight `[x, y, z]`.
    pub fn leaf_weights(&self) -> [u32; 3] {
        let mut out = [0; 3];
        for t in &self.tokens {
            if let Token::Leaf(k) = t {
                out[*k as usize] += 1;
            }
        }
        out
    }

    /// Every forest obtained by adding vertex `m + 1`: at each leaf, then as a new root.
    pub fn children(&self, m: usize) -> Vec<Forest> {
        let v = (m + 1) as u8;
        let mut out = Vec::new();
        for (i, t) in self.tokens.iter().enumerate() {
            if let Token::Leaf(_) = t {
                let mut tokens = Vec::with_capacity(self.tokens.len() + 3);
                tokens.extend_from_slice(&self.tokens[..i]);
                tokens.push(Token::Vertex(v));
                tokens.extend(self.flavor.inner_leaves().iter().map(|&k| Token::Leaf(k)));
                tokens.extend_from_slice(&self.tokens[i + 1..]);
                out.push(Forest { flavor: self.flavor, tokens, trees: self.trees });
            }
        }
        let mut tokens = self.tokens.clone();
        tokens.push(Token::Vertex(v));
        tokens.extend(self.flavor.root_leaves().iter().map(|&k| Token::Leaf(k)));
        out.push(Forest { flavor: self.flavor, tokens, trees: self.trees + 1 });
        out
    }

    fn render(&self, i: usize, root: bool, out: &mut String) -> usize {
        match self.tokens[i] {
            Token::Leaf(k) => {
                out.push(WEIGHT_LETTERS[k as usize]);
                i + 1
            }
            Token::Vertex(label) => {
                write!(out, "{label}(").unwrap();
                let arity = if root { self.flavor.root_leaves().len() } else { self.flavor.inner_leaves().len() };
                let mut j = i + 1;
                for c in 0..arity {
                    if c > 0 {
                        out.push(',');
                    }
                    j = self.render(j, false, out);
                }
                out.push(')');
                j
            }
        }
    }

    /// Canonical nested form, e.g. `1(2(x,y)) 3(x)`; leaves show their weights.
    pub fn encode(&self) -> String {
        let mut out = String::new();
        let mut i = 0;
        while i < self.tokens.len() {
            if i > 0 {
                out.push(' ');
            }
            i = self.render(i, true, &mut out);
        }
        out
    }
}

macro_rules! flavored {
    ($name:ident, $flavor:expr) => {
        #[derive(Clone, Debug)]
        pub(crate) struct $name(pub Forest);

        impl Growth for $name {
            fn empty() -> Self {
                $name(Forest::empty($flavor))
            }

            fn grow(&self, m: usize, f: &mut dyn FnMut(Self)) {
                for c in self.0.children(m) {
                    f($name(c));
                }
            }

            fn stats(&self, out: &mut Vec<u32>) {
                out.push(self.0.trees());
                out.extend(self.0.leaf_weights());
            }

            fn encode(&self) -> String {
                self.0.encode()
            }
        }
    };
}

flavored!(BinaryForest, Flavor::Binary);
flavored!(FullBinaryForest, Flavor::FullBinary);
flavored!(TernaryForest, Flavor::Ternary);
flavored!(FullTernaryForest, Flavor::FullTernary);
