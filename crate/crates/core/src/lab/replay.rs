use super::checks::{iann_descriptions, rar_square_witness, ref_coupled, LEFT_SPAN, RIGHT_SPAN};
use super::context::{meet_trivially, Lab};
use super::{CheckName, CheckVerdict, Status};
use crate::error::{Error, Result};
use crate::matrix::inner_subset_matrices;
use crate::parse::parse_element;
use crate::ring::Ring;

/// Re-evaluates the predicate behind a violation at its witnesses.
///
/// Returns `true` when the witnesses still exhibit the violation, `false`
/// when they do not or when the verdict is not a violation.
pub fn replay(ring: &Ring, verdict: &CheckVerdict) -> Result<bool> {
    if verdict.status != Status::Violation {
        return Ok(false);
    }
    let lab = Lab::new(ring)?;
    let get = |name: &str| -> Result<Option<u32>> {
        match verdict.witness(name) {
            Some(x) => {
                ring.check(x)?;
                Ok(Some(ring.idx(x)))
            }
            None => Ok(None),
        }
    };
    let need = |name: &str| -> Result<u32> { get(name)?.ok_or_else(|| Error::InvalidSpec(format!("missing witness {name}"))) };
    let has = |set: &fixedbitset::FixedBitSet, i: u32| set.contains(i as usize);
    Ok(match verdict.name {
        CheckName::InnerParam => {
            let (a, a0, x) = (need("a")?, need("a0")?, need("x")?);
            let inner = lab.inner(a);
            let (f, e) = (lab.mul(a0, a), lab.mul(a, a0));
            let param = lab.image(|t| lab.add(a0, lab.sub(t, lab.mul3(f, t, e))));
            has(&inner, a0) && has(&param, x) != has(&inner, x)
        }
        CheckName::ReflMap => {
            let (a, x) = (need("a")?, need("x")?);
            let inner = lab.inner(a);
            let reflexive = lab.reflexive(a);
            match get("y")? {
                Some(y) => {
                    has(&inner, x)
                        && has(&inner, y)
                        && lab.mul3(x, a, x) == lab.mul3(y, a, y)
                        && (lab.mul(x, a) != lab.mul(y, a) || lab.mul(a, x) != lab.mul(a, y))
                }
                None => {
                    let phis = lab.image_of(&inner, |t| lab.mul3(t, a, t));
                    let left = lab.image_of(&inner, |t| lab.mul(t, a));
                    let products = inner.ones().any(|y| left.ones().any(|l| lab.mul(l as u32, y as u32) == x));
                    has(&phis, x) != has(&reflexive, x)
                        || products != has(&reflexive, x)
                        || (has(&reflexive, x) && lab.mul3(x, a, x) != x)
                }
            }
        }
        CheckName::Decomposition => {
            let (a, a0, x) = (need("a")?, need("a0")?, need("x")?);
            if !has(&lab.inner(a), a0) {
                return Ok(false);
            }
            let [(_, iann), (_, l_plus_r), (_, re_plus_fr)] = iann_descriptions(&lab, a, a0);
            let in_iann = has(&iann, x);
            let translated = lab.image_of(&iann, |z| lab.add(a0, z));
            let reflexive = lab.reflexive(a);
            has(&l_plus_r, x) != in_iann
                || has(&re_plus_fr, x) != in_iann
                || has(&translated, x) != has(&lab.inner(a), x)
                || (has(&reflexive, a0) && has(&ref_coupled(&lab, a, a0), x) != has(&reflexive, x))
        }
        CheckName::Invariance => {
            let (a, a0, b) = (need("a")?, need("a0")?, need("b")?);
            let inner = lab.inner(a);
            if !has(&inner, a0) {
                return Ok(false);
            }
            let values = lab.image_of(&inner, |x| lab.mul3(b, x, b));
            let singleton = values.count_ones(..) == 1;
            singleton != (has(&lab.right_ideal(a), b) && has(&lab.left_ideal(a), b))
        }
        CheckName::JainPrasad => {
            let (b, d) = (need("b")?, need("d")?);
            let s = lab.add(b, d);
            if !lab.is_regular(s) {
                return Ok(false);
            }
            let (br, dr, sr) = (lab.right_ideal(b), lab.right_ideal(d), lab.right_ideal(s));
            let (rb, rd, rs) = (lab.left_ideal(b), lab.left_ideal(d), lab.left_ideal(s));
            let c1 = meet_trivially(&br, &dr) && sumset_equals(&lab, &br, &dr, &sr);
            let c2 = meet_trivially(&rb, &rd) && sumset_equals(&lab, &rb, &rd, &rs);
            let c3 = meet_trivially(&br, &dr) && meet_trivially(&rb, &rd);
            c1 != c2 || c2 != c3
        }
        CheckName::SubsetCriterion => {
            let (a, b) = (need("a")?, need("b")?);
            let d = lab.sub(a, b);
            let subset = lab.inner(a).is_subset(&lab.inner(b));
            let criterion =
                meet_trivially(&lab.right_ideal(b), &lab.right_ideal(d)) && meet_trivially(&lab.left_ideal(b), &lab.left_ideal(d));
            let identities = match get("x")? {
                Some(x) => subset && (lab.mul3(b, x, d) != 0 || lab.mul3(d, x, b) != 0 || lab.mul3(d, x, d) != d),
                None => false,
            };
            let rank_path = match (ring.to_matrix(&lab.elem(a)), ring.to_matrix(&lab.elem(b))) {
                (Some(ma), Some(mb)) => inner_subset_matrices(&ma, &mb) != subset,
                _ => false,
            };
            subset != criterion || identities || rank_path
        }
        CheckName::TheoremInner => {
            let (a, b) = (need("a")?, need("b")?);
            a != b && lab.is_regular(a) && *lab.inner(a) == *lab.inner(b)
        }
        CheckName::Nielsen => {
            let (a, b) = (need("a")?, need("b")?);
            a != b && lab.is_regular(a) && *lab.inner(a) == *lab.inner(b) && lab.is_regular(lab.sub(a, b))
        }
        CheckName::TheoremReflexive => {
            let a = need("a")?;
            match get("b")? {
                Some(b) => a != b && lab.is_regular(a) && lab.reflexive(a) == lab.reflexive(b),
                None => a != 0 && lab.reflexive(a).ones().eq([0usize]),
            }
        }
        CheckName::Hartwig => {
            let (a, b) = (need("a")?, need("b")?);
            let same_ideals = *lab.right_ideal(a) == *lab.right_ideal(b) && *lab.left_ideal(a) == *lab.left_ideal(b);
            let units = lab.units();
            let u = units.iter().any(|&u| lab.mul(a, u) == b);
            let v = units.iter().any(|&v| lab.mul(v, a) == b);
            lab.is_regular(a) && lab.is_regular(b) && same_ideals && !(u && v)
        }
        CheckName::ExampleClaims => replay_example(&lab, verdict)?,
    })
}

fn sumset_equals(lab: &Lab, s: &fixedbitset::FixedBitSet, t: &fixedbitset::FixedBitSet, target: &fixedbitset::FixedBitSet) -> bool {
    let mut sum = lab.empty();
    for x in s.ones() {
        for y in t.ones() {
            sum.insert(lab.add(x as u32, y as u32) as usize);
        }
    }
    sum == *target
}

fn replay_example(lab: &Lab, verdict: &CheckVerdict) -> Result<bool> {
    let Some(g) = lab.example() else {
        return Ok(false);
    };
    let ring = lab.ring();
    let (a, b, x) = (ring.idx(&g.a), ring.idx(&g.b), ring.idx(&g.x));
    let span = |words: &[&str]| -> Result<fixedbitset::FixedBitSet> {
        let mut s = lab.empty();
        s.insert(0);
        for word in words {
            let g = ring.idx(&parse_element(ring, word)?);
            let shifted = lab.image_of(&s, |y| lab.add(y, g));
            s.union_with(&shifted);
        }
        Ok(s)
    };
    let mut reproduced = false;
    for wit in &verdict.witnesses {
        ring.check(&wit.value)?;
        let v = ring.idx(&wit.value);
        let differs = |set: fixedbitset::FixedBitSet, expected: &fixedbitset::FixedBitSet| {
            set.contains(v as usize) != expected.contains(v as usize)
        };
        reproduced |= match wit.name.as_str() {
            "r(a)" => differs(lab.scan(|t| lab.mul(a, t) == 0), &span(&RIGHT_SPAN)?),
            "r(b)" => differs(lab.scan(|t| lab.mul(b, t) == 0), &span(&RIGHT_SPAN)?),
            "l(a)" => differs(lab.scan(|t| lab.mul(t, a) == 0), &span(&LEFT_SPAN)?),
            "l(b)" => differs(lab.scan(|t| lab.mul(t, b) == 0), &span(&LEFT_SPAN)?),
            "Ref(a)" | "Ref(b)" => {
                let elem = if wit.name == "Ref(a)" { a } else { b };
                lab.reflexive(elem).contains(v as usize) != (v == x)
            }
            "I(a)" => lab.inner(a).contains(v as usize) != lab.inner(b).contains(v as usize),
            "a" | "b" => a == b,
            "semiprime" => lab.semiprime().semiprime,
            "RaR.r" => {
                let [r, s, r2, s2] = ["RaR.r", "RaR.s", "RaR.r'", "RaR.s'"]
                    .map(|n| verdict.witness(n).map(|e| ring.idx(e)));
                match (r, s, r2, s2) {
                    (Some(r), Some(s), Some(r2), Some(s2)) => lab.mul(lab.mul3(r, a, s), lab.mul3(r2, a, s2)) != 0,
                    _ => rar_square_witness(lab, a).is_some(),
                }
            }
            _ => false,
        };
    }
    Ok(reproduced)
}
