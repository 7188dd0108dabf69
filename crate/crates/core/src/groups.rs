//! Dihedral and cyclic 2-groups, their subgroups and coset transversals.
//!
//! A dihedral group `D_{2^n} = <x, y | x^{2^{n-1}} = y^2 = e, yxy = x^{-1}>`
//! has its elements written `y^refl x^rot`. Cyclic groups reuse the same
//! encoding with `refl` always false and the generator written `g`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Groups larger than this are rejected; everything here enumerates elements.
pub const MAX_ORDER: u32 = 1 << 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Group {
    /// `D_{2^n}`, of order `2^n`, `n >= 2`.
    Dihedral { n: u32 },
    /// `C_order`, `order` a power of two (possibly 1).
    Cyclic { order: u32 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    pub refl: bool,
    pub rot: u32,
}

impl Element {
    pub const IDENTITY: Element = Element { refl: false, rot: 0 };
}

impl Group {
    pub fn dihedral(n: u32) -> Result<Self> {
        if n < 2 || (1u32 << n.min(31)) > MAX_ORDER {
            return Err(Error::InvalidGroup(format!("dihedral group of order 2^{n}")));
        }
        Ok(Group::Dihedral { n })
    }

    pub fn cyclic(order: u32) -> Result<Self> {
        if !order.is_power_of_two() || order > MAX_ORDER {
            return Err(Error::InvalidGroup(format!("cyclic group of order {order}")));
        }
        Ok(Group::Cyclic { order })
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            Group::Dihedral { n } => Group::dihedral(n).map(|_| ()),
            Group::Cyclic { order } => Group::cyclic(order).map(|_| ()),
        }
    }

    pub fn order(&self) -> u32 {
        match *self {
            Group::Dihedral { n } => 1 << n,
            Group::Cyclic { order } => order,
        }
    }

    /// Order of the rotation subgroup `<x>` (or of the whole cyclic group).
    pub fn rotation_order(&self) -> u32 {
        match *self {
            Group::Dihedral { n } => 1 << (n - 1),
            Group::Cyclic { order } => order,
        }
    }

    pub fn is_dihedral(&self) -> bool {
        matches!(self, Group::Dihedral { .. })
    }

    /// Elements in the fixed order `e, x, x^2, .., y, yx, yx^2, ..`.
    pub fn elements(&self) -> Vec<Element> {
        let n = self.rotation_order();
        let mut out: Vec<Element> = (0..n).map(|rot| Element { refl: false, rot }).collect();
        if self.is_dihedral() {
            out.extend((0..n).map(|rot| Element { refl: true, rot }));
        }
        out
    }

    /// Position of `g` in [`Group::elements`].
    pub fn index_of(&self, g: Element) -> usize {
        (u32::from(g.refl) * self.rotation_order() + g.rot) as usize
    }

    pub fn mul(&self, a: Element, b: Element) -> Element {
        let n = self.rotation_order();
        // y^e1 x^i1 y^e2 x^i2 = y^(e1+e2) x^(i2 + (-1)^e2 i1)
        let twisted = if b.refl { (n - a.rot) % n } else { a.rot };
        Element { refl: a.refl ^ b.refl, rot: (twisted + b.rot) % n }
    }

    pub fn inv(&self, a: Element) -> Element {
        if a.refl {
            a
        } else {
            Element { refl: false, rot: (self.rotation_order() - a.rot) % self.rotation_order() }
        }
    }

    pub fn pow(&self, a: Element, e: u32) -> Element {
        (0..e).fold(Element::IDENTITY, |acc, _| self.mul(acc, a))
    }

    pub fn conjugate(&self, g: Element, h: Element) -> Element {
        self.mul(self.mul(g, h), self.inv(g))
    }

    /// Generators in the order their action matrices are stored: `[x, y]`
    /// for dihedral groups, `[g]` for cyclic ones.
    pub fn generators(&self) -> Vec<Element> {
        match self {
            Group::Dihedral { .. } => vec![self.x(), self.y()],
            Group::Cyclic { order } => vec![Element { refl: false, rot: u32::from(*order > 1) }],
        }
    }

    pub fn generator_names(&self) -> &'static [&'static str] {
        match self {
            Group::Dihedral { .. } => &["x", "y"],
            Group::Cyclic { .. } => &["g"],
        }
    }

    pub fn x(&self) -> Element {
        Element { refl: false, rot: 1 % self.rotation_order() }
    }

    pub fn y(&self) -> Element {
        Element { refl: true, rot: 0 }
    }

    pub fn format_element(&self, g: Element) -> String {
        let r = match *self {
            Group::Dihedral { .. } => "x",
            Group::Cyclic { .. } => "g",
        };
        let rot = match g.rot {
            0 => String::new(),
            1 => r.to_string(),
            k => format!("{r}^{k}"),
        };
        match (g.refl, rot.is_empty()) {
            (false, true) => "e".into(),
            (false, false) => rot,
            (true, true) => "y".into(),
            (true, false) => format!("y*{rot}"),
        }
    }

    pub fn parse_element(&self, text: &str) -> Result<Element> {
        let bad = || Error::Malformed(format!("group element {text:?}"));
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if t == "e" || t == "1" {
            return Ok(Element::IDENTITY);
        }
        let (refl, rest) = if let Some(r) = t.strip_prefix('y') {
            if !self.is_dihedral() {
                return Err(bad());
            }
            (true, r.strip_prefix('*').unwrap_or(r))
        } else {
            (false, t.as_str())
        };
        let rot = if rest.is_empty() {
            0
        } else {
            let body = rest.strip_prefix('x').or_else(|| rest.strip_prefix('g')).ok_or_else(bad)?;
            if body.is_empty() {
                1
            } else {
                body.strip_prefix('^').ok_or_else(bad)?.parse::<u32>().map_err(|_| bad())?
            }
        };
        Ok(Element { refl, rot: rot % self.rotation_order() })
    }

    /// Closure of a generating set.
    pub fn generated(&self, gens: &[Element]) -> BTreeSet<Element> {
        let mut set: BTreeSet<Element> = BTreeSet::from([Element::IDENTITY]);
        let mut frontier = vec![Element::IDENTITY];
        while let Some(a) = frontier.pop() {
            for &g in gens {
                let p = self.mul(a, g);
                if set.insert(p) {
                    frontier.push(p);
                }
            }
        }
        set
    }

    /// Every subgroup, in lattice order: larger subgroups first, cyclic
    /// before dihedral, then by `d` and `i`.
    pub fn subgroups(&self) -> Vec<SubgroupDescriptor> {
        let n = self.rotation_order();
        let divisors: Vec<u32> = (0..=n.trailing_zeros()).map(|k| 1 << k).collect();
        let mut out = vec![SubgroupDescriptor { ambient: *self, kind: SubgroupKind::Trivial }];
        for &d in &divisors {
            if d < n {
                out.push(SubgroupDescriptor { ambient: *self, kind: SubgroupKind::Cyclic { d } });
            }
            if self.is_dihedral() {
                for i in 0..d {
                    out.push(SubgroupDescriptor { ambient: *self, kind: SubgroupKind::Dihedral { d, i } });
                }
            }
        }
        out.sort_by_key(|s| (std::cmp::Reverse(s.order()), s.kind.sort_key()));
        out
    }

    pub fn whole(&self) -> SubgroupDescriptor {
        match self {
            Group::Dihedral { .. } => {
                SubgroupDescriptor { ambient: *self, kind: SubgroupKind::Dihedral { d: 1, i: 0 } }
            }
            Group::Cyclic { order: 1 } => SubgroupDescriptor { ambient: *self, kind: SubgroupKind::Trivial },
            Group::Cyclic { .. } => SubgroupDescriptor { ambient: *self, kind: SubgroupKind::Cyclic { d: 1 } },
        }
    }

    pub fn trivial_subgroup(&self) -> SubgroupDescriptor {
        SubgroupDescriptor { ambient: *self, kind: SubgroupKind::Trivial }
    }

    /// Conjugacy classes of subgroups, each listed in lattice order; classes
    /// are ordered by their first member.
    pub fn conjugacy_classes_of_subgroups(&self) -> Vec<Vec<SubgroupDescriptor>> {
        let subs = self.subgroups();
        let mut classes: Vec<Vec<SubgroupDescriptor>> = Vec::new();
        for s in subs {
            if classes.iter().any(|c| c.contains(&s)) {
                continue;
            }
            let mut class: Vec<SubgroupDescriptor> = Vec::new();
            for g in self.elements() {
                let c = s.conjugate_by(g);
                if !class.contains(&c) {
                    class.push(c);
                }
            }
            let order = self.subgroups();
            class.sort_by_key(|c| order.iter().position(|o| o == c));
            classes.push(class);
        }
        classes
    }

    /// The subgroup with exactly this element set, if any.
    pub fn subgroup_from_elements(&self, set: &BTreeSet<Element>) -> Option<SubgroupDescriptor> {
        self.subgroups().into_iter().find(|s| &s.element_set() == set)
    }

    /// Parses `trivial`, `<x^d>`, `<x^d, y*x^i>`, any generator list such as
    /// `<y>` or `<x^2, y*x>`, and the names `G`, `H`, `T0`, `T1`.
    pub fn parse_subgroup(&self, text: &str) -> Result<SubgroupDescriptor> {
        let unknown = || Error::UnknownSubgroup(text.to_string());
        let t = text.trim();
        match t {
            "trivial" | "{e}" | "1" => return Ok(self.trivial_subgroup()),
            "G" => return Ok(self.whole()),
            "H" if self.is_dihedral() => {
                return Ok(SubgroupDescriptor { ambient: *self, kind: SubgroupKind::Cyclic { d: 1 } })
            }
            "T0" | "T_0" if self.is_dihedral() => {
                return self.whole().dihedral_index2(0).ok_or_else(unknown);
            }
            "T1" | "T_1" if self.is_dihedral() => {
                return self.whole().dihedral_index2(1).ok_or_else(unknown);
            }
            _ => {}
        }
        let inner = t.strip_prefix('<').and_then(|r| r.strip_suffix('>')).ok_or_else(unknown)?;
        let gens = inner
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| self.parse_element(s).map_err(|_| unknown()))
            .collect::<Result<Vec<_>>>()?;
        self.subgroup_from_elements(&self.generated(&gens)).ok_or_else(unknown)
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Group::Dihedral { n } => write!(f, "D_{}", 1u32 << n),
            Group::Cyclic { order } => write!(f, "C_{order}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SubgroupKind {
    Trivial,
    /// `<x^d>` with `d` a proper divisor of the rotation order.
    Cyclic { d: u32 },
    /// `<x^d, y x^i>` with `0 <= i < d`.
    Dihedral { d: u32, i: u32 },
}

impl SubgroupKind {
    fn sort_key(&self) -> (u8, u32, u32) {
        match *self {
            SubgroupKind::Trivial => (2, 0, 0),
            SubgroupKind::Cyclic { d } => (0, d, 0),
            SubgroupKind::Dihedral { d, i } => (1, d, i),
        }
    }
}

/// A subgroup together with its ambient group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SubgroupDescriptor {
    pub ambient: Group,
    pub kind: SubgroupKind,
}

impl SubgroupDescriptor {
    pub fn new(ambient: Group, kind: SubgroupKind) -> Result<Self> {
        let n = ambient.rotation_order();
        let ok = match kind {
            SubgroupKind::Trivial => true,
            SubgroupKind::Cyclic { d } => d.is_power_of_two() && d < n,
            SubgroupKind::Dihedral { d, i } => ambient.is_dihedral() && d.is_power_of_two() && d <= n && i < d,
        };
        if ok {
            Ok(SubgroupDescriptor { ambient, kind })
        } else {
            Err(Error::UnknownSubgroup(format!("{kind:?} in {ambient}")))
        }
    }

    pub fn order(&self) -> u32 {
        let n = self.ambient.rotation_order();
        match self.kind {
            SubgroupKind::Trivial => 1,
            SubgroupKind::Cyclic { d } => n / d,
            SubgroupKind::Dihedral { d, .. } => 2 * n / d,
        }
    }

    pub fn index(&self) -> u32 {
        self.ambient.order() / self.order()
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.ambient.order()
    }

    /// Generators as ambient elements, matching the generator order of
    /// [`SubgroupDescriptor::abstract_group`].
    pub fn generator_images(&self) -> Vec<Element> {
        let g = &self.ambient;
        let n = g.rotation_order();
        match self.kind {
            SubgroupKind::Trivial => vec![Element::IDENTITY],
            SubgroupKind::Cyclic { d } => vec![Element { refl: false, rot: d % n }],
            SubgroupKind::Dihedral { d, i } if d == n => vec![Element { refl: true, rot: i }],
            SubgroupKind::Dihedral { d, i } => vec![Element { refl: false, rot: d }, Element { refl: true, rot: i }],
        }
    }

    /// The subgroup as a group in its own right; its generators map to
    /// [`SubgroupDescriptor::generator_images`].
    pub fn abstract_group(&self) -> Group {
        let n = self.ambient.rotation_order();
        match self.kind {
            SubgroupKind::Trivial => Group::Cyclic { order: 1 },
            SubgroupKind::Cyclic { d } => Group::Cyclic { order: n / d },
            SubgroupKind::Dihedral { d, .. } if d == n => Group::Cyclic { order: 2 },
            SubgroupKind::Dihedral { d, .. } => Group::Dihedral { n: (n / d).trailing_zeros() + 1 },
        }
    }

    /// Image of an element of [`SubgroupDescriptor::abstract_group`].
    pub fn embed(&self, a: Element) -> Element {
        let g = &self.ambient;
        let imgs = self.generator_images();
        match self.abstract_group() {
            Group::Cyclic { .. } => g.pow(imgs[0], a.rot),
            Group::Dihedral { .. } => {
                let rot = g.pow(imgs[0], a.rot);
                if a.refl {
                    g.mul(imgs[1], rot)
                } else {
                    rot
                }
            }
        }
    }

    /// Ambient element -> abstract element, for members of the subgroup.
    pub fn pullback_table(&self) -> std::collections::HashMap<Element, Element> {
        self.abstract_group().elements().into_iter().map(|a| (self.embed(a), a)).collect()
    }

    pub fn element_set(&self) -> BTreeSet<Element> {
        let g = &self.ambient;
        let n = g.rotation_order();
        match self.kind {
            SubgroupKind::Trivial => BTreeSet::from([Element::IDENTITY]),
            SubgroupKind::Cyclic { d } => (0..n / d).map(|k| Element { refl: false, rot: k * d }).collect(),
            SubgroupKind::Dihedral { d, i } => (0..n / d)
                .flat_map(|k| [Element { refl: false, rot: k * d }, Element { refl: true, rot: (k * d + i) % n }])
                .collect(),
        }
    }

    pub fn contains(&self, g: Element) -> bool {
        self.element_set().contains(&g)
    }

    pub fn is_subgroup_of(&self, other: &SubgroupDescriptor) -> bool {
        self.ambient == other.ambient && self.element_set().is_subset(&other.element_set())
    }

    pub fn conjugate_by(&self, g: Element) -> SubgroupDescriptor {
        let set: BTreeSet<Element> = self.element_set().into_iter().map(|h| self.ambient.conjugate(g, h)).collect();
        self.ambient.subgroup_from_elements(&set).expect("conjugate of a subgroup is a subgroup")
    }

    pub fn is_conjugate_to(&self, other: &SubgroupDescriptor) -> bool {
        self.ambient == other.ambient && self.ambient.elements().into_iter().any(|g| self.conjugate_by(g) == *other)
    }

    /// First member (in lattice order) of the ambient conjugacy class.
    pub fn canonical_representative(&self) -> SubgroupDescriptor {
        self.ambient
            .conjugacy_classes_of_subgroups()
            .into_iter()
            .find(|c| c.contains(self))
            .map(|c| c[0])
            .expect("every subgroup lies in a class")
    }

    /// Maximal proper subgroups of `self`, as subgroups of the ambient group.
    pub fn maximal_subgroups(&self) -> Vec<SubgroupDescriptor> {
        if self.order() == 1 {
            return Vec::new();
        }
        let target = self.order() / 2;
        self.ambient
            .subgroups()
            .into_iter()
            .filter(|s| s.order() == target && s.is_subgroup_of(self))
            .collect()
    }

    fn dihedral_index2(&self, i: u32) -> Option<SubgroupDescriptor> {
        SubgroupDescriptor::new(self.ambient, SubgroupKind::Dihedral { d: 2, i }).ok()
    }

    /// Left coset representatives of `self` in the ambient group, identity
    /// first, each the earliest element of its coset.
    pub fn transversal(&self) -> Vec<Element> {
        let g = &self.ambient;
        let members: Vec<Element> = self.element_set().into_iter().collect();
        let mut covered = vec![false; g.order() as usize];
        let mut reps = Vec::new();
        for t in g.elements() {
            if covered[g.index_of(t)] {
                continue;
            }
            reps.push(t);
            for &h in &members {
                covered[g.index_of(g.mul(t, h))] = true;
            }
        }
        reps
    }

    /// `self` viewed inside the abstract group of `over`, which must contain it.
    pub fn relative_to(&self, over: &SubgroupDescriptor) -> Result<SubgroupDescriptor> {
        if !self.is_subgroup_of(over) {
            return Err(Error::NotSubgroup(format!("{self} is not contained in {over}")));
        }
        let table = over.pullback_table();
        let set: BTreeSet<Element> = self.element_set().iter().map(|h| table[h]).collect();
        over.abstract_group()
            .subgroup_from_elements(&set)
            .ok_or_else(|| Error::NotSubgroup(format!("{self} in {over}")))
    }
}

impl fmt::Display for SubgroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = &self.ambient;
        let n = g.rotation_order();
        match self.kind {
            SubgroupKind::Trivial => write!(f, "trivial"),
            SubgroupKind::Cyclic { d } => write!(f, "<{}>", g.format_element(Element { refl: false, rot: d })),
            SubgroupKind::Dihedral { d, i } => {
                let refl = g.format_element(Element { refl: true, rot: i });
                if d == n {
                    write!(f, "<{refl}>")
                } else {
                    write!(f, "<{}, {refl}>", g.format_element(Element { refl: false, rot: d }))
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d8() -> Group {
        Group::dihedral(3).unwrap()
    }

    /// Subgroups by brute force: closures of all pairs of elements.
    fn brute_force_subgroups(g: &Group) -> BTreeSet<BTreeSet<Element>> {
        let els = g.elements();
        let mut out = BTreeSet::new();
        for &a in &els {
            for &b in &els {
                out.insert(g.generated(&[a, b]));
            }
        }
        out
    }

    #[test]
    fn presentation_relations() {
        for n in 2..=6 {
            let g = Group::dihedral(n).unwrap();
            let (x, y) = (g.x(), g.y());
            assert_eq!(g.pow(x, g.rotation_order()), Element::IDENTITY);
            assert_eq!(g.mul(y, y), Element::IDENTITY);
            assert_eq!(g.mul(g.mul(y, x), y), g.inv(x));
            assert_eq!(g.order() as usize, g.elements().len());
            for a in g.elements() {
                assert_eq!(g.mul(a, g.inv(a)), Element::IDENTITY);
                assert_eq!(g.mul(Element::IDENTITY, a), a);
                // the encoding matches the word y^refl x^rot
                let word = g.mul(if a.refl { y } else { Element::IDENTITY }, g.pow(x, a.rot));
                assert_eq!(word, a);
            }
        }
    }

    #[test]
    fn d8_examples() {
        let g = d8();
        let (x, y) = (g.x(), g.y());
        assert_eq!(g.mul(g.mul(y, x), y), Element { refl: false, rot: 3 });
        let yx = g.mul(y, x);
        assert_eq!(g.mul(yx, yx), Element::IDENTITY);
    }

    #[test]
    fn subgroup_counts_match_brute_force() {
        for n in 2..=4 {
            let g = Group::dihedral(n).unwrap();
            let subs = g.subgroups();
            let sets: BTreeSet<_> = subs.iter().map(|s| s.element_set()).collect();
            assert_eq!(sets.len(), subs.len(), "duplicate descriptors for n={n}");
            assert_eq!(sets, brute_force_subgroups(&g), "n={n}");
            for s in &subs {
                assert_eq!(s.element_set().len() as u32, s.order());
                assert_eq!(g.order() % s.order(), 0);
                assert_eq!(g.generated(&s.generator_images()), s.element_set());
            }
        }
        assert_eq!(d8().subgroups().len(), 10);
        let c8 = Group::cyclic(8).unwrap();
        assert_eq!(c8.subgroups().len(), 4);
        assert_eq!(brute_force_subgroups(&c8).len(), 4);
    }

    #[test]
    fn d8_conjugacy_classes() {
        let g = d8();
        let classes = g.conjugacy_classes_of_subgroups();
        assert_eq!(classes.len(), 8);
        let texts: Vec<Vec<String>> =
            classes.iter().map(|c| c.iter().map(|s| s.to_string()).collect()).collect();
        assert!(texts.contains(&vec!["<y>".to_string(), "<y*x^2>".to_string()]));
        assert!(texts.contains(&vec!["<y*x>".to_string(), "<y*x^3>".to_string()]));
        assert!(texts.contains(&vec!["<x^2>".to_string()]));
        assert!(texts.contains(&vec!["trivial".to_string()]));
    }

    #[test]
    fn maximal_subgroups_of_d8() {
        let g = d8();
        let max: Vec<String> = g.whole().maximal_subgroups().iter().map(|s| s.to_string()).collect();
        assert_eq!(max, vec!["<x>", "<x^2, y>", "<x^2, y*x>"]);
        let t0 = g.parse_subgroup("T0").unwrap();
        let below: Vec<String> = t0.maximal_subgroups().iter().map(|s| s.to_string()).collect();
        assert_eq!(below, vec!["<x^2>", "<y>", "<y*x^2>"]);
    }

    #[test]
    fn transversals() {
        let g = d8();
        let fmt = |s: &SubgroupDescriptor| -> Vec<String> {
            s.transversal().into_iter().map(|t| g.format_element(t)).collect()
        };
        assert_eq!(fmt(&g.parse_subgroup("T0").unwrap()), vec!["e", "x"]);
        assert_eq!(fmt(&g.parse_subgroup("H").unwrap()), vec!["e", "y"]);
        assert_eq!(fmt(&g.whole()), vec!["e"]);
        for n in 2..=4 {
            let g = Group::dihedral(n).unwrap();
            for s in g.subgroups() {
                let t = s.transversal();
                assert_eq!(t.len() as u32, s.index());
                assert_eq!(t[0], Element::IDENTITY);
                let mut all = BTreeSet::new();
                for &r in &t {
                    for h in s.element_set() {
                        assert!(all.insert(g.mul(r, h)), "cosets overlap");
                    }
                }
                assert_eq!(all.len() as u32, g.order());
            }
        }
    }

    #[test]
    fn subgroup_text_round_trip() {
        for n in 2..=4 {
            let g = Group::dihedral(n).unwrap();
            for s in g.subgroups() {
                assert_eq!(g.parse_subgroup(&s.to_string()).unwrap(), s);
            }
        }
        let g = d8();
        assert_eq!(g.parse_subgroup("<x^2, y*x^0>").unwrap().to_string(), "<x^2, y>");
        assert_eq!(g.parse_subgroup("<x^4, y>").unwrap().to_string(), "<y>");
        assert!(matches!(g.parse_subgroup("Q8"), Err(Error::UnknownSubgroup(_))));
        let c4 = Group::cyclic(4).unwrap();
        assert_eq!(c4.parse_subgroup("<g^2>").unwrap().to_string(), "<g^2>");
    }

    #[test]
    fn abstract_groups_and_embeddings() {
        let g = d8();
        let t0 = g.parse_subgroup("T0").unwrap();
        assert_eq!(t0.abstract_group(), Group::Dihedral { n: 2 });
        let t1 = g.parse_subgroup("T1").unwrap();
        let imgs: Vec<String> = t1.generator_images().iter().map(|&e| g.format_element(e)).collect();
        assert_eq!(imgs, vec!["x^2", "y*x"]);
        let y = g.parse_subgroup("<y>").unwrap();
        assert_eq!(y.abstract_group(), Group::Cyclic { order: 2 });
        for s in g.subgroups() {
            let a = s.abstract_group();
            let image: BTreeSet<Element> = a.elements().into_iter().map(|e| s.embed(e)).collect();
            assert_eq!(image, s.element_set());
            // homomorphism check
            for p in a.elements() {
                for q in a.elements() {
                    assert_eq!(s.embed(a.mul(p, q)), g.mul(s.embed(p), s.embed(q)));
                }
            }
        }
    }

    #[test]
    fn relative_subgroups() {
        let g = d8();
        let t0 = g.parse_subgroup("T0").unwrap();
        let yx2 = g.parse_subgroup("<y*x^2>").unwrap();
        let rel = yx2.relative_to(&t0).unwrap();
        assert_eq!(rel.ambient, Group::Dihedral { n: 2 });
        assert_eq!(rel.to_string(), "<y*x>");
        assert!(g.parse_subgroup("<y*x>").unwrap().relative_to(&t0).is_err());
    }
}
