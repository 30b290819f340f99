//! The DRAM Petri net data model: coordinate-decorated places and
//! transitions, regular/inhibitor/reset arcs, timed arcs, and markings.
//!
//! Node identity across nets is always the `(label, coordinate)` pair;
//! internal indices are an implementation detail and never part of
//! equality or hashing. Two independently constructed nets compare equal
//! exactly when their label views coincide.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use crate::expr::NormalExpr;

/// Position of a node in the bank/rank hierarchy.
///
/// A `Bank` coordinate fully identifies one bank within a rank (and within
/// a bank group when the device declares groups); a `Rank` coordinate
/// carries only the rank index. Group-less devices use `group: None`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Coordinate {
    Rank {
        rank: u32,
    },
    Bank {
        rank: u32,
        group: Option<u32>,
        bank: u32,
    },
}

impl Coordinate {
    pub fn rank_index(&self) -> u32 {
        match self {
            Coordinate::Rank { rank } | Coordinate::Bank { rank, .. } => *rank,
        }
    }

    pub fn is_bank(&self) -> bool {
        matches!(self, Coordinate::Bank { .. })
    }

    pub fn group_index(&self) -> Option<u32> {
        match self {
            Coordinate::Bank { group, .. } => *group,
            Coordinate::Rank { .. } => None,
        }
    }

    pub fn same_rank(&self, other: &Coordinate) -> bool {
        self.rank_index() == other.rank_index()
    }

    /// Same rank and same bank group; both endpoints must be bank nodes.
    pub fn same_bank_group(&self, other: &Coordinate) -> bool {
        match (self, other) {
            (
                Coordinate::Bank {
                    rank: r1,
                    group: g1,
                    ..
                },
                Coordinate::Bank {
                    rank: r2,
                    group: g2,
                    ..
                },
            ) => r1 == r2 && g1 == g2,
            _ => false,
        }
    }
}

impl fmt::Display for Coordinate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coordinate::Rank { rank } => write!(f, "r{rank}"),
            Coordinate::Bank {
                rank,
                group: Some(g),
                bank,
            } => write!(f, "r{rank}.g{g}.b{bank}"),
            Coordinate::Bank {
                rank,
                group: None,
                bank,
            } => write!(f, "r{rank}.b{bank}"),
        }
    }
}

impl Serialize for Coordinate {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlaceId(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TransId(pub usize);

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Place {
    pub name: String,
    pub coordinate: Coordinate,
    pub initial_tokens: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Transition {
    pub command: String,
    pub coordinate: Coordinate,
}

impl Transition {
    pub fn label(&self) -> String {
        format!("{}@{}", self.command, self.coordinate)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ArcKind {
    Regular,
    Inhibitor,
    Reset,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NodeRef {
    Place(PlaceId),
    Transition(TransId),
}

/// A regular, inhibitor, or reset arc. Regular arcs connect place->transition
/// or transition->place; inhibitor and reset arcs connect place->transition
/// only. Reset arcs clear their source place and ignore `weight`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arc {
    pub kind: ArcKind,
    pub source: NodeRef,
    pub target: NodeRef,
    pub weight: u64,
}

/// A required delay between two commands, an element of the timed-arc set
/// once the expression is evaluated against the bound timing parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TimedArc {
    pub source: TransId,
    pub target: TransId,
    pub delay_expr: NormalExpr,
    pub delay: u64,
}

/// Token count per place; the mutable simulation state. Defined on exactly
/// the places of the net it was created from.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Marking(Vec<u64>);

impl Marking {
    pub fn tokens(&self, p: PlaceId) -> u64 {
        self.0[p.0]
    }

    pub(crate) fn tokens_mut(&mut self, p: PlaceId) -> &mut u64 {
        &mut self.0[p.0]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub(crate) fn from_vec(v: Vec<u64>) -> Self {
        Marking(v)
    }
}

/// The full net tuple, immutable after construction and safe to share
/// across concurrent readers.
#[derive(Clone, Debug)]
pub struct Net {
    banks_per_rank: u32,
    ranks: u32,
    bank_groups: Option<u32>,
    places: Vec<Place>,
    transitions: Vec<Transition>,
    arcs: Vec<Arc>,
    timed_arcs: Vec<TimedArc>,
    timing_params: BTreeMap<String, u64>,
    // Derived firing tables, built once over well-formed arcs.
    inputs: Vec<Vec<(PlaceId, u64)>>,
    outputs: Vec<Vec<(PlaceId, u64)>>,
    inhibitors: Vec<Vec<(PlaceId, u64)>>,
    resets: Vec<Vec<PlaceId>>,
    timed_inputs: Vec<Vec<(TransId, u64)>>,
    place_lookup: HashMap<(String, Coordinate), PlaceId>,
    transition_lookup: HashMap<(String, Coordinate), TransId>,
}

impl Net {
    pub fn new(
        banks_per_rank: u32,
        ranks: u32,
        bank_groups: Option<u32>,
        places: Vec<Place>,
        transitions: Vec<Transition>,
        arcs: Vec<Arc>,
        timed_arcs: Vec<TimedArc>,
        timing_params: BTreeMap<String, u64>,
    ) -> Self {
        let mut net = Net {
            banks_per_rank,
            ranks,
            bank_groups,
            places,
            transitions,
            arcs,
            timed_arcs,
            timing_params,
            inputs: Vec::new(),
            outputs: Vec::new(),
            inhibitors: Vec::new(),
            resets: Vec::new(),
            timed_inputs: Vec::new(),
            place_lookup: HashMap::new(),
            transition_lookup: HashMap::new(),
        };
        net.rebuild_tables();
        net
    }

    fn rebuild_tables(&mut self) {
        let nt = self.transitions.len();
        self.inputs = vec![Vec::new(); nt];
        self.outputs = vec![Vec::new(); nt];
        self.inhibitors = vec![Vec::new(); nt];
        self.resets = vec![Vec::new(); nt];
        self.timed_inputs = vec![Vec::new(); nt];
        for arc in &self.arcs {
            if !self.arc_endpoints_valid(arc) {
                // Reported by validate_structure; excluded from the
                // firing tables so simulation on the rest stays total.
                continue;
            }
            match (arc.kind, arc.source, arc.target) {
                (ArcKind::Regular, NodeRef::Place(p), NodeRef::Transition(t)) => {
                    self.inputs[t.0].push((p, arc.weight));
                }
                (ArcKind::Regular, NodeRef::Transition(t), NodeRef::Place(p)) => {
                    self.outputs[t.0].push((p, arc.weight));
                }
                (ArcKind::Inhibitor, NodeRef::Place(p), NodeRef::Transition(t)) => {
                    self.inhibitors[t.0].push((p, arc.weight));
                }
                (ArcKind::Reset, NodeRef::Place(p), NodeRef::Transition(t)) => {
                    self.resets[t.0].push(p);
                }
                _ => {}
            }
        }
        for ta in &self.timed_arcs {
            if ta.source.0 < nt && ta.target.0 < nt {
                self.timed_inputs[ta.target.0].push((ta.source, ta.delay));
            }
        }
        for list in self
            .inputs
            .iter_mut()
            .chain(self.outputs.iter_mut())
            .chain(self.inhibitors.iter_mut())
        {
            list.sort();
        }
        for list in &mut self.resets {
            list.sort();
        }
        for list in &mut self.timed_inputs {
            list.sort();
        }
        self.place_lookup = self
            .places
            .iter()
            .enumerate()
            .map(|(i, p)| ((p.name.clone(), p.coordinate), PlaceId(i)))
            .collect();
        self.transition_lookup = self
            .transitions
            .iter()
            .enumerate()
            .map(|(i, t)| ((t.command.clone(), t.coordinate), TransId(i)))
            .collect();
    }

    fn arc_endpoints_valid(&self, arc: &Arc) -> bool {
        let valid_ref = |r: NodeRef| match r {
            NodeRef::Place(p) => p.0 < self.places.len(),
            NodeRef::Transition(t) => t.0 < self.transitions.len(),
        };
        if !valid_ref(arc.source) || !valid_ref(arc.target) {
            return false;
        }
        match arc.kind {
            ArcKind::Regular => matches!(
                (arc.source, arc.target),
                (NodeRef::Place(_), NodeRef::Transition(_))
                    | (NodeRef::Transition(_), NodeRef::Place(_))
            ),
            ArcKind::Inhibitor | ArcKind::Reset => matches!(
                (arc.source, arc.target),
                (NodeRef::Place(_), NodeRef::Transition(_))
            ),
        }
    }

    /// Replaces the timed-arc set, re-deriving the delay tables. Used by
    /// net construction, which expands timing constraints only after the
    /// structural part of the net exists.
    pub(crate) fn with_timed_arcs(mut self, timed_arcs: Vec<TimedArc>) -> Self {
        self.timed_arcs = timed_arcs;
        self.rebuild_tables();
        self
    }

    pub fn banks_per_rank(&self) -> u32 {
        self.banks_per_rank
    }

    pub fn ranks(&self) -> u32 {
        self.ranks
    }

    pub fn bank_groups(&self) -> Option<u32> {
        self.bank_groups
    }

    pub fn places(&self) -> &[Place] {
        &self.places
    }

    pub fn transitions(&self) -> &[Transition] {
        &self.transitions
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn timed_arcs(&self) -> &[TimedArc] {
        &self.timed_arcs
    }

    pub fn timing_params(&self) -> &BTreeMap<String, u64> {
        &self.timing_params
    }

    pub fn place(&self, id: PlaceId) -> &Place {
        &self.places[id.0]
    }

    pub fn transition(&self, id: TransId) -> &Transition {
        &self.transitions[id.0]
    }

    pub fn find_place(&self, name: &str, coord: Coordinate) -> Option<PlaceId> {
        self.place_lookup.get(&(name.to_string(), coord)).copied()
    }

    pub fn find_transition(&self, command: &str, coord: Coordinate) -> Option<TransId> {
        self.transition_lookup
            .get(&(command.to_string(), coord))
            .copied()
    }

    pub fn transition_ids(&self) -> impl Iterator<Item = TransId> {
        (0..self.transitions.len()).map(TransId)
    }

    pub(crate) fn inputs(&self, t: TransId) -> &[(PlaceId, u64)] {
        &self.inputs[t.0]
    }

    pub(crate) fn outputs(&self, t: TransId) -> &[(PlaceId, u64)] {
        &self.outputs[t.0]
    }

    pub(crate) fn inhibitors(&self, t: TransId) -> &[(PlaceId, u64)] {
        &self.inhibitors[t.0]
    }

    pub(crate) fn resets(&self, t: TransId) -> &[PlaceId] {
        &self.resets[t.0]
    }

    pub(crate) fn timed_inputs(&self, t: TransId) -> &[(TransId, u64)] {
        &self.timed_inputs[t.0]
    }

    /// M0: the marking every simulation starts from.
    pub fn initial_marking(&self) -> Marking {
        Marking(self.places.iter().map(|p| p.initial_tokens).collect())
    }

    fn node_label(&self, r: NodeRef) -> String {
        match r {
            NodeRef::Place(p) if p.0 < self.places.len() => {
                format!("place {}@{}", self.places[p.0].name, self.places[p.0].coordinate)
            }
            NodeRef::Transition(t) if t.0 < self.transitions.len() => {
                format!(
                    "transition {}@{}",
                    self.transitions[t.0].command, self.transitions[t.0].coordinate
                )
            }
            NodeRef::Place(p) => format!("place #{}", p.0),
            NodeRef::Transition(t) => format!("transition #{}", t.0),
        }
    }

    /// Coordinate-relabeled view of every labeled component, used for both
    /// net equality and the symmetry check.
    fn label_view(&self, map: &dyn Fn(Coordinate) -> Coordinate) -> LabelView {
        let place_label =
            |p: PlaceId| -> (String, Coordinate) { (self.places[p.0].name.clone(), map(self.places[p.0].coordinate)) };
        let trans_label = |t: TransId| -> (String, Coordinate) {
            (
                self.transitions[t.0].command.clone(),
                map(self.transitions[t.0].coordinate),
            )
        };
        let mut view = LabelView::default();
        for (i, p) in self.places.iter().enumerate() {
            view.places
                .insert((p.name.clone(), map(p.coordinate), p.initial_tokens));
            let _ = i;
        }
        for t in &self.transitions {
            view.transitions.insert((t.command.clone(), map(t.coordinate)));
        }
        for arc in &self.arcs {
            if !self.arc_endpoints_valid(arc) {
                continue;
            }
            let ep = |r: NodeRef| match r {
                NodeRef::Place(p) => (0u8, place_label(p)),
                NodeRef::Transition(t) => (1u8, trans_label(t)),
            };
            view.arcs
                .insert((arc.kind, ep(arc.source), ep(arc.target), arc.weight));
        }
        for ta in &self.timed_arcs {
            if ta.source.0 >= self.transitions.len() || ta.target.0 >= self.transitions.len() {
                continue;
            }
            view.timed_arcs.insert((
                trans_label(ta.source),
                trans_label(ta.target),
                ta.delay_expr.clone(),
                ta.delay,
            ));
        }
        view
    }
}

type NodeLabel = (String, Coordinate);

#[derive(Default, PartialEq, Eq)]
struct LabelView {
    places: BTreeSet<(String, Coordinate, u64)>,
    transitions: BTreeSet<NodeLabel>,
    arcs: BTreeSet<(ArcKind, (u8, NodeLabel), (u8, NodeLabel), u64)>,
    timed_arcs: BTreeSet<(NodeLabel, NodeLabel, NormalExpr, u64)>,
}

impl PartialEq for Net {
    fn eq(&self, other: &Self) -> bool {
        self.banks_per_rank == other.banks_per_rank
            && self.ranks == other.ranks
            && self.bank_groups == other.bank_groups
            && self.timing_params == other.timing_params
            && self.label_view(&|c| c) == other.label_view(&|c| c)
    }
}

impl Eq for Net {}

/// Structural problems found in a net. Problems are reported, not thrown,
/// so a front end can print all of them at once.
#[derive(Debug, Default, Clone, Serialize)]
pub struct ValidationReport {
    pub orphaned_nodes: Vec<String>,
    pub dangling_arcs: Vec<String>,
    pub duplicate_labels: Vec<String>,
    pub unbound_params: Vec<String>,
    /// A net with no nodes at all cannot model anything.
    pub empty_net: bool,
}

impl ValidationReport {
    pub fn is_clean(&self) -> bool {
        self.orphaned_nodes.is_empty()
            && self.dangling_arcs.is_empty()
            && self.duplicate_labels.is_empty()
            && self.unbound_params.is_empty()
            && !self.empty_net
    }
}

/// Checks well-formedness: no orphaned nodes, no dangling arc endpoints,
/// unique `(label, coordinate)` pairs, and every timing parameter referenced
/// by a timed arc bound in the net's parameter map.
pub fn validate_structure(net: &Net) -> ValidationReport {
    let mut report = ValidationReport {
        empty_net: net.places().is_empty() && net.transitions().is_empty(),
        ..Default::default()
    };

    let mut place_incident = vec![false; net.places().len()];
    let mut trans_incident = vec![false; net.transitions().len()];
    for arc in net.arcs() {
        let mut mark = |r: NodeRef| match r {
            NodeRef::Place(p) if p.0 < place_incident.len() => place_incident[p.0] = true,
            NodeRef::Transition(t) if t.0 < trans_incident.len() => trans_incident[t.0] = true,
            _ => {}
        };
        mark(arc.source);
        mark(arc.target);
        if !net.arc_endpoints_valid(arc) {
            report.dangling_arcs.push(format!(
                "{:?} arc {} -> {}",
                arc.kind,
                net.node_label(arc.source),
                net.node_label(arc.target)
            ));
        }
    }
    for (i, p) in net.places().iter().enumerate() {
        if !place_incident[i] {
            report
                .orphaned_nodes
                .push(format!("place {}@{}", p.name, p.coordinate));
        }
    }
    for (i, t) in net.transitions().iter().enumerate() {
        if !trans_incident[i] {
            report
                .orphaned_nodes
                .push(format!("transition {}@{}", t.command, t.coordinate));
        }
    }

    let mut seen_places: BTreeSet<NodeLabel> = BTreeSet::new();
    for p in net.places() {
        if !seen_places.insert((p.name.clone(), p.coordinate)) {
            report
                .duplicate_labels
                .push(format!("place {}@{}", p.name, p.coordinate));
        }
    }
    let mut seen_trans: BTreeSet<NodeLabel> = BTreeSet::new();
    for t in net.transitions() {
        if !seen_trans.insert((t.command.clone(), t.coordinate)) {
            report
                .duplicate_labels
                .push(format!("transition {}@{}", t.command, t.coordinate));
        }
    }

    let mut unbound: BTreeSet<String> = BTreeSet::new();
    for ta in net.timed_arcs() {
        for param in ta.delay_expr.params() {
            if !net.timing_params().contains_key(&param) {
                unbound.insert(param);
            }
        }
    }
    report.unbound_params = unbound.into_iter().collect();
    report
}

/// True iff every bank-index permutation (within each rank, and within each
/// bank group when groups are present) relabels the net onto itself.
///
/// Checking adjacent transpositions suffices: they generate the full
/// symmetric group. For grouped nets, whole-group swaps are checked as well.
pub fn check_bank_symmetry(net: &Net) -> bool {
    let base = net.label_view(&|c| c);
    let banks = net.banks_per_rank();
    let groups = net.bank_groups();

    let mut permutations: Vec<Box<dyn Fn(Coordinate) -> Coordinate>> = Vec::new();
    match groups {
        None => {
            for r in 0..net.ranks() {
                for i in 0..banks.saturating_sub(1) {
                    permutations.push(Box::new(move |c| swap_banks(c, r, None, i, i + 1)));
                }
            }
        }
        Some(g) => {
            let per_group = if g == 0 { 0 } else { banks / g };
            for r in 0..net.ranks() {
                for grp in 0..g {
                    for i in 0..per_group.saturating_sub(1) {
                        permutations.push(Box::new(move |c| swap_banks(c, r, Some(grp), i, i + 1)));
                    }
                }
                for grp in 0..g.saturating_sub(1) {
                    permutations.push(Box::new(move |c| swap_groups(c, r, grp, grp + 1)));
                }
            }
        }
    }

    permutations
        .iter()
        .all(|perm| net.label_view(perm.as_ref()) == base)
}

fn swap_banks(c: Coordinate, rank: u32, group: Option<u32>, a: u32, b: u32) -> Coordinate {
    match c {
        Coordinate::Bank {
            rank: r,
            group: g,
            bank,
        } if r == rank && (group.is_none() || g == group) => {
            let bank = if bank == a {
                b
            } else if bank == b {
                a
            } else {
                bank
            };
            Coordinate::Bank { rank: r, group: g, bank }
        }
        other => other,
    }
}

fn swap_groups(c: Coordinate, rank: u32, a: u32, b: u32) -> Coordinate {
    match c {
        Coordinate::Bank {
            rank: r,
            group: Some(g),
            bank,
        } if r == rank => {
            let g = if g == a {
                b
            } else if g == b {
                a
            } else {
                g
            };
            Coordinate::Bank {
                rank: r,
                group: Some(g),
                bank,
            }
        }
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bank(rank: u32, bank: u32) -> Coordinate {
        Coordinate::Bank {
            rank,
            group: None,
            bank,
        }
    }

    fn two_bank_net() -> Net {
        // Per bank: IDLE --(ACT)--> ACTIVE, plus a rank-level PREA with
        // reset arcs from both ACTIVE places.
        let mut places = Vec::new();
        let mut transitions = Vec::new();
        let mut arcs = Vec::new();
        for b in 0..2u32 {
            places.push(Place {
                name: "IDLE".into(),
                coordinate: bank(0, b),
                initial_tokens: 1,
            });
            places.push(Place {
                name: "ACTIVE".into(),
                coordinate: bank(0, b),
                initial_tokens: 0,
            });
            transitions.push(Transition {
                command: "ACT".into(),
                coordinate: bank(0, b),
            });
        }
        transitions.push(Transition {
            command: "PREA".into(),
            coordinate: Coordinate::Rank { rank: 0 },
        });
        for b in 0..2usize {
            arcs.push(Arc {
                kind: ArcKind::Regular,
                source: NodeRef::Place(PlaceId(b * 2)),
                target: NodeRef::Transition(TransId(b)),
                weight: 1,
            });
            arcs.push(Arc {
                kind: ArcKind::Regular,
                source: NodeRef::Transition(TransId(b)),
                target: NodeRef::Place(PlaceId(b * 2 + 1)),
                weight: 1,
            });
            arcs.push(Arc {
                kind: ArcKind::Reset,
                source: NodeRef::Place(PlaceId(b * 2 + 1)),
                target: NodeRef::Transition(TransId(2)),
                weight: 1,
            });
        }
        Net::new(2, 1, None, places, transitions, arcs, Vec::new(), BTreeMap::new())
    }

    #[test]
    fn clean_net_validates() {
        let net = two_bank_net();
        let report = validate_structure(&net);
        assert!(report.is_clean(), "{report:?}");
    }

    #[test]
    fn orphan_place_is_reported() {
        let mut net = two_bank_net();
        net.places.push(Place {
            name: "LONELY".into(),
            coordinate: bank(0, 0),
            initial_tokens: 0,
        });
        net.rebuild_tables();
        let report = validate_structure(&net);
        assert_eq!(report.orphaned_nodes, vec!["place LONELY@r0.b0".to_string()]);
    }

    #[test]
    fn dangling_endpoint_is_reported() {
        let mut net = two_bank_net();
        net.arcs.push(Arc {
            kind: ArcKind::Regular,
            source: NodeRef::Place(PlaceId(0)),
            target: NodeRef::Transition(TransId(99)),
            weight: 1,
        });
        net.rebuild_tables();
        let report = validate_structure(&net);
        assert_eq!(report.dangling_arcs.len(), 1);
        assert!(report.dangling_arcs[0].contains("transition #99"));
    }

    #[test]
    fn empty_net_is_flagged() {
        let net = Net::new(1, 1, None, Vec::new(), Vec::new(), Vec::new(), Vec::new(), BTreeMap::new());
        let report = validate_structure(&net);
        assert!(report.empty_net);
        assert!(!report.is_clean());
    }

    #[test]
    fn duplicate_label_is_reported() {
        let mut net = two_bank_net();
        net.places.push(Place {
            name: "IDLE".into(),
            coordinate: bank(0, 0),
            initial_tokens: 1,
        });
        net.rebuild_tables();
        let report = validate_structure(&net);
        assert_eq!(report.duplicate_labels, vec!["place IDLE@r0.b0".to_string()]);
    }

    #[test]
    fn symmetric_net_passes_symmetry_check() {
        assert!(check_bank_symmetry(&two_bank_net()));
    }

    #[test]
    fn asymmetric_net_fails_symmetry_check() {
        let mut net = two_bank_net();
        // Drop one bank's reset arc: bank 1 no longer mirrors bank 0.
        let idx = net
            .arcs
            .iter()
            .position(|a| a.kind == ArcKind::Reset && a.source == NodeRef::Place(PlaceId(3)))
            .unwrap();
        net.arcs.remove(idx);
        net.rebuild_tables();
        assert!(!check_bank_symmetry(&net));
    }

    #[test]
    fn single_bank_net_is_trivially_symmetric() {
        let net = Net::new(
            1,
            1,
            None,
            vec![Place {
                name: "P".into(),
                coordinate: bank(0, 0),
                initial_tokens: 1,
            }],
            vec![Transition {
                command: "T".into(),
                coordinate: bank(0, 0),
            }],
            vec![Arc {
                kind: ArcKind::Regular,
                source: NodeRef::Place(PlaceId(0)),
                target: NodeRef::Transition(TransId(0)),
                weight: 1,
            }],
            Vec::new(),
            BTreeMap::new(),
        );
        assert!(check_bank_symmetry(&net));
    }

    #[test]
    fn net_equality_ignores_construction_order() {
        let a = two_bank_net();
        let mut b = two_bank_net();
        b.places.reverse();
        b.transitions.reverse();
        // Remap arc indices to the reversed layouts.
        let np = b.places.len();
        let nt = b.transitions.len();
        for arc in &mut b.arcs {
            arc.source = match arc.source {
                NodeRef::Place(p) => NodeRef::Place(PlaceId(np - 1 - p.0)),
                NodeRef::Transition(t) => NodeRef::Transition(TransId(nt - 1 - t.0)),
            };
            arc.target = match arc.target {
                NodeRef::Place(p) => NodeRef::Place(PlaceId(np - 1 - p.0)),
                NodeRef::Transition(t) => NodeRef::Transition(TransId(nt - 1 - t.0)),
            };
        }
        b.rebuild_tables();
        assert_eq!(a, b);
    }

    #[test]
    fn coordinate_display_formats() {
        assert_eq!(Coordinate::Rank { rank: 0 }.to_string(), "r0");
        assert_eq!(bank(0, 1).to_string(), "r0.b1");
        assert_eq!(
            Coordinate::Bank {
                rank: 2,
                group: Some(1),
                bank: 0
            }
            .to_string(),
            "r2.g1.b0"
        );
    }
}
