use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

/// A dual coordinate: `Center(i, j)` is the value on `Z_ij` (i < j),
/// `Generator(i)` the value on the generator `Z_i`. Indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variable {
    Center(usize, usize),
    Generator(usize),
}

impl Variable {
    pub fn center(i: usize, j: usize) -> Self {
        assert!(1 <= i && i < j, "center coordinate needs 1 <= i < j, got ({i}, {j})");
        Variable::Center(i, j)
    }

    pub fn name(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variable::Center(i, j) => write!(f, "l{i}{j}"),
            Variable::Generator(i) => write!(f, "l{i}"),
        }
    }
}

/// Fixed, ordered list of variables shared by every polynomial of one
/// computation.
#[derive(Debug, PartialEq, Eq)]
pub struct VarSpace {
    vars: Vec<Variable>,
    by_name: HashMap<String, usize>,
}

impl VarSpace {
    pub fn new(vars: Vec<Variable>) -> Arc<Self> {
        let by_name = vars.iter().enumerate().map(|(i, v)| (v.name(), i)).collect();
        Arc::new(VarSpace { vars, by_name })
    }

    /// Coordinates of the free step-two algebra on `m` generators: all
    /// `Center(i, j)` in the order (1,2), (1,3), ..., (m-1,m), then
    /// `Generator(1..=m)`.
    pub fn for_free2(m: usize) -> Arc<Self> {
        let mut vars = Vec::with_capacity(m * (m - 1) / 2 + m);
        for i in 1..=m {
            for j in i + 1..=m {
                vars.push(Variable::Center(i, j));
            }
        }
        vars.extend((1..=m).map(Variable::Generator));
        Self::new(vars)
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn vars(&self) -> &[Variable] {
        &self.vars
    }

    pub fn index_of(&self, v: Variable) -> Option<usize> {
        self.vars.iter().position(|&w| w == v)
    }

    pub fn lookup(&self, name: &str) -> Option<usize> {
        self.by_name.get(name).copied()
    }
}
