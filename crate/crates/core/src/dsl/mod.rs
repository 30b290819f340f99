//! The model-description language: a block-structured textual format for
//! declaring per-bank, per-rank, and device-global net templates plus
//! timing-constraint families.
//!
//! ```text
//! device mini_ddr {
//!   timing_params { tRCD = 3; tRAS = 5..9; }
//!   per rank r  { transition PREA; }
//!   per bank b  {
//!     place IDLE init 1;
//!     transition ACT;
//!     arc IDLE -> ACT;
//!     reset ACTIVE -> PREA(r);
//!   }
//!   timing intra_bank [ACT] -> [RD, WR] : tRCD;
//! }
//! ```
//!
//! Statements in a `per bank` block are instantiated once per bank, in a
//! `per rank` block once per rank, and in a `global` block exactly once.
//! A bare label in an arc resolves at the block's own coordinate first and
//! falls back to the enclosing rank; an explicit `(var)` suffix pins the
//! hierarchy level. Timing parameters given as a range bind to the range
//! minimum unless overridden.

mod lexer;
mod parser;

use std::fmt;

use serde::Serialize;

use crate::expr::TimingExpr;
use crate::net::ArcKind;

pub use parser::parse_model;

/// Scope predicate of a timing-constraint family: which coordinate pairs
/// the declared command pairs expand over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Scope {
    IntraBank,
    IntraBankGroup,
    IntraRank,
    Global,
}

impl Scope {
    pub fn keyword(&self) -> &'static str {
        match self {
            Scope::IntraBank => "intra_bank",
            Scope::IntraBankGroup => "intra_bank_group",
            Scope::IntraRank => "intra_rank",
            Scope::Global => "global",
        }
    }

    pub const ALL: [Scope; 4] = [
        Scope::IntraBank,
        Scope::IntraBankGroup,
        Scope::IntraRank,
        Scope::Global,
    ];
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

/// Hierarchy level a node reference is pinned to. `Here` means the bare
/// form, which resolves at the surrounding block's coordinate and falls
/// back to the rank level inside `per bank` blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoordRef {
    Here,
    Bank,
    Rank,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ref {
    pub name: String,
    pub coord: CoordRef,
}

impl Ref {
    pub fn bare(name: &str) -> Self {
        Ref {
            name: name.to_string(),
            coord: CoordRef::Here,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Stmt {
    Place {
        name: String,
        init: TimingExpr,
    },
    Transition {
        name: String,
    },
    Arc {
        kind: ArcKind,
        source: Ref,
        target: Ref,
        /// Absent means weight 1. Reset arcs never carry a weight.
        weight: Option<TimingExpr>,
    },
}

/// Which template block a statement lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockKind {
    PerBank,
    PerRank,
    Global,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Block {
    /// Coordinate variable named in the block header (`per bank b`).
    pub var: Option<String>,
    pub stmts: Vec<Stmt>,
}

/// One `timing SCOPE [srcs] -> [dsts] : expr;` declaration. Expansion takes
/// the Cartesian product of the two command lists over every coordinate
/// pair satisfying the scope predicate.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TimingConstraintDecl {
    pub scope: Scope,
    pub sources: Vec<String>,
    pub destinations: Vec<String>,
    pub delay: TimingExpr,
}

/// A timing parameter bound to a single value or a permitted range.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ParamValue {
    Value(u64),
    Range(u64, u64),
}

impl ParamValue {
    /// The deterministic default binding: ranges bind to their minimum.
    pub fn default_binding(&self) -> u64 {
        match self {
            ParamValue::Value(v) => *v,
            ParamValue::Range(lo, _) => *lo,
        }
    }
}

/// A parsed model: the template the net builder replicates per bank and
/// per rank at instantiation time.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ModelDefinition {
    pub name: String,
    /// Device parameters (`banks`, `ranks`, `bank_groups`).
    pub params: Vec<(String, u64)>,
    pub timing_params: Vec<(String, ParamValue)>,
    pub per_bank: Block,
    pub per_rank: Block,
    pub global: Block,
    pub timing_constraints: Vec<TimingConstraintDecl>,
}

impl ModelDefinition {
    pub fn param(&self, name: &str) -> Option<u64> {
        self.params
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| *v)
    }

    pub fn timing_param(&self, name: &str) -> Option<ParamValue> {
        self.timing_params
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| *v)
    }

    pub fn block(&self, kind: BlockKind) -> &Block {
        match kind {
            BlockKind::PerBank => &self.per_bank,
            BlockKind::PerRank => &self.per_rank,
            BlockKind::Global => &self.global,
        }
    }

    pub fn block_mut(&mut self, kind: BlockKind) -> &mut Block {
        match kind {
            BlockKind::PerBank => &mut self.per_bank,
            BlockKind::PerRank => &mut self.per_rank,
            BlockKind::Global => &mut self.global,
        }
    }

    fn bank_var(&self) -> &str {
        self.per_bank.var.as_deref().unwrap_or("b")
    }

    fn rank_var(&self) -> &str {
        self.per_rank.var.as_deref().unwrap_or("r")
    }

    fn render_ref(&self, r: &Ref) -> String {
        match r.coord {
            CoordRef::Here => r.name.clone(),
            CoordRef::Bank => format!("{}({})", r.name, self.bank_var()),
            CoordRef::Rank => format!("{}({})", r.name, self.rank_var()),
        }
    }

    fn render_stmt(&self, s: &Stmt) -> String {
        match s {
            Stmt::Place { name, init } => format!("place {name} init {init};"),
            Stmt::Transition { name } => format!("transition {name};"),
            Stmt::Arc {
                kind,
                source,
                target,
                weight,
            } => {
                let kw = match kind {
                    ArcKind::Regular => "arc",
                    ArcKind::Inhibitor => "inhibitor",
                    ArcKind::Reset => "reset",
                };
                let mut line = format!(
                    "{kw} {} -> {}",
                    self.render_ref(source),
                    self.render_ref(target)
                );
                if let Some(w) = weight {
                    line.push_str(&format!(" weight {w}"));
                }
                line.push(';');
                line
            }
        }
    }

    /// Canonical text form; `parse_model(print(m))` returns `m` exactly.
    pub fn print(&self) -> String {
        let mut out = String::new();
        let name = if self.name.is_empty() {
            "unnamed"
        } else {
            &self.name
        };
        out.push_str(&format!("device {name} {{\n"));
        if !self.params.is_empty() {
            out.push_str("\n  params {\n");
            for (n, v) in &self.params {
                out.push_str(&format!("    {n} = {v};\n"));
            }
            out.push_str("  }\n");
        }
        if !self.timing_params.is_empty() {
            out.push_str("\n  timing_params {\n");
            for (n, v) in &self.timing_params {
                match v {
                    ParamValue::Value(x) => out.push_str(&format!("    {n} = {x};\n")),
                    ParamValue::Range(lo, hi) => {
                        out.push_str(&format!("    {n} = {lo}..{hi};\n"))
                    }
                }
            }
            out.push_str("  }\n");
        }
        let blocks = [
            (BlockKind::PerRank, format!("per rank {}", self.rank_var())),
            (BlockKind::PerBank, format!("per bank {}", self.bank_var())),
            (BlockKind::Global, "global".to_string()),
        ];
        for (kind, header) in blocks {
            let block = self.block(kind);
            if block.stmts.is_empty() && block.var.is_none() {
                continue;
            }
            out.push_str(&format!("\n  {header} {{\n"));
            for s in &block.stmts {
                out.push_str(&format!("    {}\n", self.render_stmt(s)));
            }
            out.push_str("  }\n");
        }
        if !self.timing_constraints.is_empty() {
            out.push('\n');
            for decl in &self.timing_constraints {
                out.push_str(&format!(
                    "  timing {} [{}] -> [{}] : {};\n",
                    decl.scope.keyword(),
                    decl.sources.join(", "),
                    decl.destinations.join(", "),
                    decl.delay
                ));
            }
        }
        out.push_str("}\n");
        out
    }
}

/// A parse or semantic problem with its source position.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub line: usize,
    pub col: usize,
    pub message: String,
    /// Token kinds the parser would have accepted, when known.
    pub expected: Vec<String>,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(" | "))?;
        }
        Ok(())
    }
}
