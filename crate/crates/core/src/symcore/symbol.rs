use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

/// An interned commuting indeterminate.
///
/// Symbols are ordered by their position in the global table. The single
/// lowercase letters `a`..`z` are interned first, in alphabetical order, so
/// every one-letter variable sorts alphabetically regardless of the order in
/// which a program first mentions it. Longer names are appended on demand.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(u32);

struct Interner {
    by_name: HashMap<&'static str, u32>,
    names: Vec<&'static str>,
}

impl Interner {
    fn seeded() -> Self {
        let mut interner = Interner { by_name: HashMap::new(), names: Vec::new() };
        for c in 'a'..='z' {
            interner.intern(&c.to_string());
        }
        interner
    }

    fn intern(&mut self, name: &str) -> u32 {
        if let Some(&id) = self.by_name.get(name) {
            return id;
        }
        let leaked: &'static str = Box::leak(name.to_owned().into_boxed_str());
        let id = self.names.len() as u32;
        self.names.push(leaked);
        self.by_name.insert(leaked, id);
        id
    }
}

fn table() -> &'static RwLock<Interner> {
    static TABLE: OnceLock<RwLock<Interner>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(Interner::seeded()))
}

impl Symbol {
    /// Interns `name`, returning the existing symbol if it is already known.
    pub fn new(name: &str) -> Symbol {
        if let Some(&id) = table().read().unwrap().by_name.get(name) {
            return Symbol(id);
        }
        Symbol(table().write().unwrap().intern(name))
    }

    pub fn name(self) -> &'static str {
        table().read().unwrap().names[self.0 as usize]
    }

    pub fn id(self) -> u32 {
        self.0
    }

    /// Whether `name` is a legal symbol spelling: `[A-Za-z_][A-Za-z0-9_]*`.
    pub fn is_valid_name(name: &str) -> bool {
        let mut chars = name.chars();
        match chars.next() {
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
            _ => return false,
        }
        chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Symbol({})", self.name())
    }
}

/// Shorthand for [`Symbol::new`].
pub fn sym(name: &str) -> Symbol {
    Symbol::new(name)
}
