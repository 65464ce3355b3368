use std::collections::HashMap;
use std::hash::Hash;

use fixedbitset::FixedBitSet;

use super::context::{first_difference, meet_trivially, Lab};
use super::{Outcome, Witness};
use crate::matrix::inner_subset_matrices;
use crate::parse::{parse_element, render};

fn w(lab: &Lab, name: &str, i: u32) -> Witness {
    Witness::new(name, lab.elem(i))
}

fn show(lab: &Lab, i: u32) -> String {
    render(lab.ring(), &lab.elem(i))
}

fn members(s: &FixedBitSet) -> impl Iterator<Item = u32> + '_ {
    s.ones().map(|i| i as u32)
}

fn sumset(lab: &Lab, s: &FixedBitSet, t: &FixedBitSet) -> FixedBitSet {
    let mut out = lab.empty();
    for x in members(s) {
        for y in members(t) {
            out.insert(lab.add(x, y) as usize);
        }
    }
    out
}

fn product_set(lab: &Lab, s: &FixedBitSet, t: &FixedBitSet) -> FixedBitSet {
    let mut out = lab.empty();
    for x in members(s) {
        for y in members(t) {
            out.insert(lab.mul(x, y) as usize);
        }
    }
    out
}

/// Groups of two or more elements sharing a key, in canonical order of
/// their first members.
fn collisions<K: Hash + Eq>(elems: &[u32], key: impl Fn(u32) -> K) -> Vec<Vec<u32>> {
    let mut index: HashMap<K, usize> = HashMap::new();
    let mut groups: Vec<Vec<u32>> = Vec::new();
    for &a in elems {
        let slot = *index.entry(key(a)).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[slot].push(a);
    }
    groups.retain(|g| g.len() > 1);
    groups
}

fn pair_count(groups: &[Vec<u32>]) -> usize {
    groups.iter().map(|g| g.len() * (g.len() - 1) / 2).sum()
}

fn not_semiprime_note(lab: &Lab) -> String {
    let z = lab.semiprime().witness.as_ref().map(|z| render(lab.ring(), z)).unwrap_or_default();
    format!("ring is not semiprime (z = {z} has zRz = 0)")
}

/// `I(a)` against `{a0 + t − a0·a·t·a·a0}` for every regular `a` and every
/// `a0 ∈ I(a)` (only the first `a0` when sampled).
pub fn inner_param(lab: &Lab) -> Outcome {
    let mut pairs = 0usize;
    for a in lab.regular() {
        let inner = lab.inner(a);
        let witnesses: Vec<u32> = if lab.sampled() { lab.witness(a).into_iter().collect() } else { members(&inner).collect() };
        for a0 in witnesses {
            let (f, e) = (lab.mul(a0, a), lab.mul(a, a0));
            let param = lab.image(|t| lab.add(a0, lab.sub(t, lab.mul3(f, t, e))));
            pairs += 1;
            if let Some(x) = first_difference(&param, &inner) {
                return Outcome::violation(
                    vec![w(lab, "a", a), w(lab, "a0", a0), w(lab, "x", x)],
                    "x lies in exactly one of I(a) and {a0 + t - a0 a t a a0 : t in R}",
                );
            }
        }
    }
    Outcome::pass(format!("{pairs} pairs (a, a0) with a0 in I(a)"))
}

/// The four properties of `φ_a(x) = x·a·x` for every regular `a`.
pub fn refl_map(lab: &Lab) -> Outcome {
    let regular = lab.regular();
    for &a in &regular {
        let inner = lab.inner(a);
        let reflexive = lab.reflexive(a);
        let mut phis = lab.empty();
        let mut fibers: HashMap<u32, (u32, u32, u32)> = HashMap::new();
        for x in members(&inner) {
            let p = lab.mul3(x, a, x);
            phis.insert(p as usize);
            let sides = (lab.mul(x, a), lab.mul(a, x));
            match fibers.get(&p) {
                Some(&(y, xa, ax)) if (xa, ax) != sides => {
                    return Outcome::violation(
                        vec![w(lab, "a", a), w(lab, "x", x), w(lab, "y", y)],
                        "x, y in I(a) with xax = yay but x - y not in l(a) ∩ r(a)",
                    );
                }
                Some(_) => {}
                None => {
                    fibers.insert(p, (x, sides.0, sides.1));
                }
            }
        }
        if let Some(x) = first_difference(&phis, &reflexive) {
            return Outcome::violation(vec![w(lab, "a", a), w(lab, "x", x)], "x lies in exactly one of φ_a(I(a)) and Ref(a)");
        }
        let left = lab.image_of(&inner, |x| lab.mul(x, a));
        let via_product = product_set(lab, &left, &inner);
        if let Some(x) = first_difference(&via_product, &reflexive) {
            return Outcome::violation(vec![w(lab, "a", a), w(lab, "x", x)], "x lies in exactly one of I(a) a I(a) and Ref(a)");
        }
        let moved = members(&reflexive).find(|&x| lab.mul3(x, a, x) != x);
        if let Some(x) = moved {
            return Outcome::violation(vec![w(lab, "a", a), w(lab, "x", x)], "x in Ref(a) but xax != x");
        }
    }
    Outcome::pass(format!("{} regular elements", regular.len()))
}

/// `{(a0 + f'·s)·a·(a0 + r·e') : r, s ∈ R}` for a reflexive `a0`.
pub(crate) fn ref_coupled(lab: &Lab, a: u32, a0: u32) -> FixedBitSet {
    let one = lab.one();
    let (e_c, f_c) = (lab.sub(one, lab.mul(a, a0)), lab.sub(one, lab.mul(a0, a)));
    let left = lab.image(|s| lab.mul(lab.add(a0, lab.mul(f_c, s)), a));
    let right = lab.image(|r| lab.add(a0, lab.mul(r, e_c)));
    product_set(lab, &left, &right)
}

/// `a0 + f·R·e' + f'·R·e + f'·R·a·R·e'` with independent summands.
pub(crate) fn ref_sumset(lab: &Lab, a: u32, a0: u32) -> FixedBitSet {
    let one = lab.one();
    let (e, f) = (lab.mul(a, a0), lab.mul(a0, a));
    let (e_c, f_c) = (lab.sub(one, e), lab.sub(one, f));
    let f_r_ec = lab.image(|r| lab.mul3(f, r, e_c));
    let fc_r_e = lab.image(|r| lab.mul3(f_c, r, e));
    let fc_r_a = lab.image(|r| lab.mul3(f_c, r, a));
    let r_ec = lab.image(|s| lab.mul(s, e_c));
    let middle = product_set(lab, &fc_r_a, &r_ec);
    let sum = sumset(lab, &sumset(lab, &f_r_ec, &fc_r_e), &middle);
    lab.image_of(&sum, |z| lab.add(a0, z))
}

/// The three descriptions of `Iann(a)` at `a0`, each as `(label, set)`.
pub(crate) fn iann_descriptions(lab: &Lab, a: u32, a0: u32) -> [(&'static str, FixedBitSet); 3] {
    let one = lab.one();
    let (e_c, f_c) = (lab.sub(one, lab.mul(a, a0)), lab.sub(one, lab.mul(a0, a)));
    let l = lab.scan(|x| lab.mul(x, a) == 0);
    let r = lab.scan(|x| lab.mul(a, x) == 0);
    let re_c = lab.image(|t| lab.mul(t, e_c));
    let f_cr = lab.image(|t| lab.mul(f_c, t));
    [
        ("Iann(a)", lab.scan(|x| lab.mul3(a, x, a) == 0)),
        ("l(a) + r(a)", sumset(lab, &l, &r)),
        ("Re' + f'R", sumset(lab, &re_c, &f_cr)),
    ]
}

/// `Iann(a) = l(a) + r(a) = R·e' + f'·R` and `I(a) = a0 + Iann(a)` at the
/// first `a0`; `Ref(a)` as the coupled parametrization at every reflexive
/// `a0` (the first one when sampled).
pub fn decomposition(lab: &Lab) -> Outcome {
    let regular = lab.regular();
    let mut sumset_differs = None;
    let mut sumset_count = 0usize;
    for &a in &regular {
        let a0 = lab.witness(a).expect("regular");
        let [(_, iann), rest @ ..] = iann_descriptions(lab, a, a0);
        for (label, set) in rest {
            if let Some(x) = first_difference(&set, &iann) {
                return Outcome::violation(
                    vec![w(lab, "a", a), w(lab, "a0", a0), w(lab, "x", x)],
                    format!("x lies in exactly one of Iann(a) and {label}"),
                );
            }
        }
        let translate = lab.image_of(&iann, |z| lab.add(a0, z));
        if let Some(x) = first_difference(&translate, &lab.inner(a)) {
            return Outcome::violation(
                vec![w(lab, "a", a), w(lab, "a0", a0), w(lab, "x", x)],
                "x lies in exactly one of I(a) and a0 + Iann(a)",
            );
        }
        let reflexive = lab.reflexive(a);
        let chosen: Vec<u32> = if lab.sampled() { reflexive.minimum().map(|i| i as u32).into_iter().collect() } else { members(&reflexive).collect() };
        for (k, &r0) in chosen.iter().enumerate() {
            if let Some(x) = first_difference(&ref_coupled(lab, a, r0), &reflexive) {
                return Outcome::violation(
                    vec![w(lab, "a", a), w(lab, "a0", r0), w(lab, "x", x)],
                    "x lies in exactly one of Ref(a) and (a0 + f'R) a (a0 + Re')",
                );
            }
            if k == 0 && ref_sumset(lab, a, r0) != reflexive {
                sumset_count += 1;
                sumset_differs.get_or_insert(a);
            }
        }
    }
    let mut note = format!("{} regular elements", regular.len());
    if let Some(a) = sumset_differs {
        note.push_str(&format!(
            "; Ref(a) uses one r, s in all three terms: with independent summands a0 + fRe' + f'Re + f'RaRe' is larger for {sumset_count} of them (first a = {})",
            show(lab, a)
        ));
    }
    Outcome::pass(note)
}

/// `b·I(a)·b` is a singleton iff `b ∈ Ra ∩ aR`, for regular `a` and all `b`.
pub fn invariance(lab: &Lab) -> Outcome {
    let semiprime = lab.semiprime().semiprime;
    let gens = lab.generators();
    let (mut singleton_only, mut member_only) = (0usize, 0usize);
    let mut first = None;
    for a in lab.regular() {
        let a0 = lab.witness(a).expect("regular");
        let (f, e) = (lab.mul(a0, a), lab.mul(a, a0));
        let (ar, ra) = (lab.right_ideal(a), lab.left_ideal(a));
        for &b in lab.domain() {
            let singleton = gens.iter().all(|&g| lab.mul3(b, lab.sub(g, lab.mul3(f, g, e)), b) == 0);
            let member = ar.contains(b as usize) && ra.contains(b as usize);
            if singleton == member {
                continue;
            }
            if semiprime {
                return Outcome::violation(
                    vec![w(lab, "a", a), w(lab, "a0", a0), w(lab, "b", b)],
                    if singleton { "bI(a)b is a singleton but b is not in Ra ∩ aR" } else { "b in Ra ∩ aR but bI(a)b has several members" },
                );
            }
            if singleton {
                singleton_only += 1;
            } else {
                member_only += 1;
            }
            first.get_or_insert((a, b));
        }
    }
    if semiprime {
        return Outcome::pass("biconditional holds for every regular a and every b");
    }
    let mut note = format!(
        "{}; observed {singleton_only} pairs with bI(a)b a singleton and b outside Ra ∩ aR, {member_only} pairs the other way",
        not_semiprime_note(lab)
    );
    if let Some((a, b)) = first {
        note.push_str(&format!(" (first: a = {}, b = {})", show(lab, a), show(lab, b)));
    }
    Outcome::skipped(note)
}

/// For `b + d` regular: `bR ⊕ dR = (b+d)R`, `Rb ⊕ Rd = R(b+d)` and
/// `bR ∩ dR = Rb ∩ Rd = 0` are equivalent.
pub fn jain_prasad(lab: &Lab) -> Outcome {
    let mut pairs = 0usize;
    let mut direct = 0usize;
    for &b in lab.domain() {
        for &d in lab.domain() {
            let s = lab.add(b, d);
            if !lab.is_regular(s) {
                continue;
            }
            pairs += 1;
            let (br, dr, sr) = (lab.right_ideal(b), lab.right_ideal(d), lab.right_ideal(s));
            let (rb, rd, rs) = (lab.left_ideal(b), lab.left_ideal(d), lab.left_ideal(s));
            let right_meet = meet_trivially(&br, &dr);
            let left_meet = meet_trivially(&rb, &rd);
            // (b+d)R ⊆ bR + dR always; the reverse holds iff b, d ∈ (b+d)R.
            let c1 = right_meet && sr.contains(b as usize) && sr.contains(d as usize);
            let c2 = left_meet && rs.contains(b as usize) && rs.contains(d as usize);
            let c3 = right_meet && left_meet;
            if c1 != c2 || c2 != c3 {
                return Outcome::violation(
                    vec![w(lab, "b", b), w(lab, "d", d)],
                    format!("conditions disagree: right direct sum {c1}, left direct sum {c2}, both intersections zero {c3}"),
                );
            }
            direct += usize::from(c1);
        }
    }
    Outcome::pass(format!("{pairs} pairs with b + d regular, {direct} of them direct"))
}

/// `I(a) ⊆ I(b)` iff `bR ∩ dR = 0` and `Rb ∩ Rd = 0` (`d = a − b`), with
/// `b·x·d = d·x·b = 0` and `d·x·d = d` on `I(a)` whenever the inclusion holds.
/// Matrix rings also compare against the rank criterion.
pub fn subset_criterion(lab: &Lab) -> Outcome {
    let semiprime = lab.semiprime().semiprime;
    let matrices = lab.ring().matrix_params().is_some();
    let regular = lab.regular();
    let (mut pairs, mut included) = (0usize, 0usize);
    let (mut inclusion_only, mut criterion_only) = (0usize, 0usize);
    for &a in &regular {
        let ia = lab.inner(a);
        for &b in &regular {
            let d = lab.sub(a, b);
            let subset = ia.is_subset(&lab.inner(b));
            let criterion =
                meet_trivially(&lab.right_ideal(b), &lab.right_ideal(d)) && meet_trivially(&lab.left_ideal(b), &lab.left_ideal(d));
            pairs += 1;
            let named = || vec![w(lab, "a", a), w(lab, "b", b), w(lab, "d", d)];
            if subset != criterion {
                if semiprime {
                    let note = if subset {
                        "I(a) ⊆ I(b) but bR ∩ dR or Rb ∩ Rd is nonzero"
                    } else {
                        "bR ∩ dR = Rb ∩ Rd = 0 but I(a) is not inside I(b)"
                    };
                    return Outcome::violation(named(), note);
                }
                if subset {
                    inclusion_only += 1;
                } else {
                    criterion_only += 1;
                }
            }
            if !semiprime {
                continue;
            }
            if matrices {
                let ring = lab.ring();
                let (ma, mb) = (ring.to_matrix(&lab.elem(a)).expect("matrix"), ring.to_matrix(&lab.elem(b)).expect("matrix"));
                if inner_subset_matrices(&ma, &mb) != subset {
                    return Outcome::violation(named(), "rank criterion disagrees with the enumerated inclusion");
                }
            }
            if subset {
                included += 1;
                let broken = members(&ia).find(|&x| lab.mul3(b, x, d) != 0 || lab.mul3(d, x, b) != 0 || lab.mul3(d, x, d) != d);
                if let Some(x) = broken {
                    let mut ws = named();
                    ws.push(w(lab, "x", x));
                    return Outcome::violation(ws, "I(a) ⊆ I(b) but one of bxd = 0, dxb = 0, dxd = d fails at x in I(a)");
                }
            }
        }
    }
    if !semiprime {
        return Outcome::skipped(format!(
            "{}; observed {inclusion_only} pairs with I(a) ⊆ I(b) but a nonzero intersection, {criterion_only} pairs with zero intersections and no inclusion",
            not_semiprime_note(lab)
        ));
    }
    let mut note = format!("{pairs} ordered regular pairs, {included} inclusions; bxd = dxb = 0 and dxd = d hold on each");
    if matrices {
        note.push_str("; rank criterion agrees");
    }
    Outcome::pass(note)
}

/// Prefers the example generators as the reported pair when they collide.
fn collision_witness(lab: &Lab, groups: &[Vec<u32>]) -> (u32, u32) {
    if let Some(g) = lab.example() {
        let (a, b) = (lab.ring().idx(&g.a), lab.ring().idx(&g.b));
        if groups.iter().any(|grp| grp.contains(&a) && grp.contains(&b)) {
            return (a, b);
        }
    }
    (groups[0][0], groups[0][1])
}

fn theorem_outcome(lab: &Lab, groups: &[Vec<u32>], set: &str, checked: usize) -> Outcome {
    let semiprime = lab.semiprime().semiprime;
    if groups.is_empty() {
        let note = format!("{checked} regular elements with pairwise distinct {set}-sets");
        return if semiprime { Outcome::pass(note) } else { Outcome::pass(format!("{}; {note}", not_semiprime_note(lab))) };
    }
    let (a, b) = collision_witness(lab, groups);
    let count = pair_count(groups);
    let note = if semiprime {
        format!("{set}(a) = {set}(b) for distinct regular a, b; {count} such pairs")
    } else {
        format!(
            "{}, so the hypothesis fails and the collision is consistent with the theorem; {set}(a) = {set}(b) for {count} pairs of distinct regular elements",
            not_semiprime_note(lab)
        )
    };
    Outcome::violation(vec![w(lab, "a", a), w(lab, "b", b)], note)
}

/// Distinct regular elements have distinct `I`-sets.
pub fn theorem_inner(lab: &Lab) -> Outcome {
    let regular = lab.regular();
    let groups = collisions(&regular, |a| lab.inner(a));
    theorem_outcome(lab, &groups, "I", regular.len())
}

/// `I(a) = I(b)` with `a − b` regular forces `a = b`, for regular `a, b`.
pub fn nielsen(lab: &Lab) -> Outcome {
    let regular = lab.regular();
    let groups = collisions(&regular, |a| lab.inner(a));
    for group in &groups {
        for (i, &a) in group.iter().enumerate() {
            for &b in &group[i + 1..] {
                let d = lab.sub(a, b);
                if lab.is_regular(d) {
                    return Outcome::violation(
                        vec![w(lab, "a", a), w(lab, "b", b), w(lab, "d", d)],
                        "I(a) = I(b) and d = a - b is regular, yet a != b",
                    );
                }
            }
        }
    }
    let mut note = format!("{} pairs of distinct regular elements share I-sets; no difference is regular", pair_count(&groups));
    if let Some(g) = lab.example() {
        let d = lab.sub(lab.ring().idx(&g.a), lab.ring().idx(&g.b));
        let verdict = if lab.is_regular(d) { "is regular" } else { "is not regular" };
        note.push_str(&format!("; a - b = {} {verdict}", show(lab, d)));
    }
    Outcome::pass(note)
}

/// Distinct elements have distinct `Ref`-sets; `Ref(a) = {0}` only for `a = 0`.
pub fn theorem_reflexive(lab: &Lab) -> Outcome {
    let zero_only = {
        let mut s = lab.empty();
        s.insert(0);
        s
    };
    if let Some(&a) = lab.domain().iter().find(|&&a| a != 0 && lab.reflexive(a) == zero_only) {
        return Outcome::violation(vec![w(lab, "a", a)], "Ref(a) = {0} for a nonzero a");
    }
    let nonzero: Vec<u32> = lab.regular().into_iter().filter(|&a| a != 0).collect();
    let groups = collisions(&nonzero, |a| lab.reflexive(a));
    theorem_outcome(lab, &groups, "Ref", nonzero.len() + 1)
}

fn find_unit(lab: &Lab, pred: impl Fn(u32) -> bool) -> Option<u32> {
    if lab.sampled() {
        (0..lab.size()).filter(|&u| pred(u)).find(|&u| lab.is_unit(u))
    } else {
        lab.units().iter().copied().find(|&u| pred(u))
    }
}

/// Regular `a, b` with `aR = bR` and `Ra = Rb` satisfy `b = a·u = v·a` for
/// some units `u, v`.
pub fn hartwig(lab: &Lab) -> Outcome {
    let regular = lab.regular();
    let groups = collisions(&regular, |a| ((*lab.right_ideal(a)).clone(), (*lab.left_ideal(a)).clone()));
    // a = b is settled by u = v = 1.
    let mut pairs = regular.len();
    for group in &groups {
        for &a in group {
            for &b in group {
                if a == b {
                    continue;
                }
                pairs += 1;
                let u = find_unit(lab, |u| lab.mul(a, u) == b);
                let v = find_unit(lab, |v| lab.mul(v, a) == b);
                if u.is_none() || v.is_none() {
                    let side = if u.is_none() { "no unit u with b = au" } else { "no unit v with b = va" };
                    return Outcome::violation(vec![w(lab, "a", a), w(lab, "b", b)], format!("aR = bR and Ra = Rb but {side}"));
                }
            }
        }
    }
    let mut note = format!("{pairs} ordered regular pairs with aR = bR and Ra = Rb");
    if !lab.sampled() {
        note.push_str(&format!("; {} units", lab.units().len()));
    }
    Outcome::pass(note)
}

fn span(lab: &Lab, words: &[&str]) -> FixedBitSet {
    let mut s = lab.empty();
    s.insert(0);
    for word in words {
        let g = lab.ring().idx(&parse_element(lab.ring(), word).expect("example basis word"));
        let shifted = lab.image_of(&s, |x| lab.add(x, g));
        s.union_with(&shifted);
    }
    s
}

pub(crate) const RIGHT_SPAN: [&str; 6] = ["a", "b", "ax", "bx", "axb", "bxa"];
pub(crate) const LEFT_SPAN: [&str; 6] = ["a", "b", "xa", "xb", "axb", "bxa"];

/// First `(r, s, r', s')` over additive generators with `(r·a·s)·(r'·a·s') ≠ 0`.
pub(crate) fn rar_square_witness(lab: &Lab, a: u32) -> Option<[u32; 4]> {
    let gens = lab.generators();
    let terms: Vec<(u32, u32, u32)> = gens.iter().flat_map(|&r| gens.iter().map(move |&s| (r, s))).map(|(r, s)| (r, s, lab.mul3(r, a, s))).collect();
    terms.iter().find_map(|&(r, s, left)| {
        terms.iter().find(|&&(_, _, right)| lab.mul(left, right) != 0).map(|&(r2, s2, _)| [r, s, r2, s2])
    })
}

/// The stated facts about the example algebra, each reported in the note.
pub fn example_claims(lab: &Lab) -> Outcome {
    let Some(g) = lab.example() else {
        let reason = match crate::example::example_generators(lab.ring()) {
            Err(crate::error::Error::WrongRing(why)) => why,
            Err(e) => e.to_string(),
            Ok(_) => String::new(),
        };
        return Outcome::skipped(format!("applies only to the example ring ({reason})"));
    };
    let ring = lab.ring();
    let (a, b, x) = (ring.idx(&g.a), ring.idx(&g.b), ring.idx(&g.x));
    let mut claims = Claims::default();
    let right_span = span(lab, &RIGHT_SPAN);
    let left_span = span(lab, &LEFT_SPAN);
    for (label, set, expected, span_name) in [
        ("r(a)", lab.scan(|t| lab.mul(a, t) == 0), &right_span, "<a,b,ax,bx,axb,bxa>"),
        ("r(b)", lab.scan(|t| lab.mul(b, t) == 0), &right_span, "<a,b,ax,bx,axb,bxa>"),
        ("l(a)", lab.scan(|t| lab.mul(t, a) == 0), &left_span, "<a,b,xa,xb,axb,bxa>"),
        ("l(b)", lab.scan(|t| lab.mul(t, b) == 0), &left_span, "<a,b,xa,xb,axb,bxa>"),
    ] {
        let diff = first_difference(&set, expected);
        claims.add(
            &format!("{label} = {span_name}"),
            diff.is_none(),
            format!(
                "{} elements against {}; {} lies in exactly one",
                set.count_ones(..),
                expected.count_ones(..),
                diff.map(|d| show(lab, d)).unwrap_or_default()
            ),
            diff.map(|d| vec![w(lab, label, d)]).unwrap_or_default(),
        );
    }
    let mut just_x = lab.empty();
    just_x.insert(x as usize);
    for (label, elem) in [("Ref(a)", a), ("Ref(b)", b)] {
        let set = lab.reflexive(elem);
        let diff = first_difference(&set, &just_x);
        claims.add(
            &format!("{label} = {{x}}"),
            diff.is_none(),
            format!("{} elements; {} is also reflexive", set.count_ones(..), diff.map(|d| show(lab, d)).unwrap_or_default()),
            diff.map(|d| vec![w(lab, label, d)]).unwrap_or_default(),
        );
    }
    let diff = first_difference(&lab.inner(a), &lab.inner(b));
    claims.add(
        "I(a) = I(b)",
        diff.is_none(),
        format!("{} lies in exactly one", diff.map(|d| show(lab, d)).unwrap_or_default()),
        diff.map(|d| vec![w(lab, "I(a)", d)]).unwrap_or_default(),
    );
    claims.lines.push(format!("|I(a)| = {}", lab.inner(a).count_ones(..)));
    claims.add("a != b", a != b, "a = b".into(), vec![w(lab, "a", a), w(lab, "b", b)]);
    let semiprime = lab.semiprime();
    claims.add(
        "not semiprime",
        !semiprime.semiprime,
        "no nonzero z with zRz = 0".into(),
        vec![w(lab, "semiprime", 0)],
    );
    if let Some(z) = &semiprime.witness {
        claims.lines.push(format!("zRz = 0 for z = {}", render(ring, z)));
    }
    let square = rar_square_witness(lab, a);
    claims.add(
        "(RaR)^2 = 0",
        square.is_none(),
        square
            .map(|[r, s, r2, s2]| {
                format!("(r a s)(r' a s') = {} for r = {}, s = {}, r' = {}, s' = {}", show(lab, lab.mul(lab.mul3(r, a, s), lab.mul3(r2, a, s2))), show(lab, r), show(lab, s), show(lab, r2), show(lab, s2))
            })
            .unwrap_or_default(),
        square.map(|[r, s, r2, s2]| vec![w(lab, "RaR.r", r), w(lab, "RaR.s", s), w(lab, "RaR.r'", r2), w(lab, "RaR.s'", s2)]).unwrap_or_default(),
    );
    let note = claims.lines.join("; ");
    if claims.witnesses.is_empty() {
        Outcome::pass(note)
    } else {
        Outcome::violation(claims.witnesses, note)
    }
}

#[derive(Default)]
struct Claims {
    lines: Vec<String>,
    witnesses: Vec<Witness>,
}

impl Claims {
    fn add(&mut self, name: &str, ok: bool, detail: String, ws: Vec<Witness>) {
        if ok {
            self.lines.push(format!("{name}: holds"));
        } else {
            self.lines.push(format!("{name}: fails ({detail})"));
            self.witnesses.extend(ws);
        }
    }
}
