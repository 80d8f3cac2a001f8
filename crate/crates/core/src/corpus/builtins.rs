//! The builtin group registry.

use crate::corpus::field::Field;
use crate::error::{Error, Result};
use crate::invariants::is_prime;
use crate::perm::{Group, Permutation};
use crate::verify::symmetric_group;

/// Registry names with their parameter shapes, for help text and errors.
pub const REGISTRY: &[&str] = &[
    "cyclic(n)",
    "dihedral(n)",
    "sym(n)",
    "alt(n)",
    "elem_abelian(p,k)",
    "q8",
    "sl23",
    "gl2_3",
    "sl2(q)",
    "paper_example(p,e)",
    "direct_product(G,H,...)",
    "swap_product(G)",
];

/// Field orders accepted by `sl2(q)`.
pub const SL2_FIELDS: [u32; 5] = [4, 5, 7, 8, 9];

/// Largest degree accepted by the integer-parameter constructors.
pub const MAX_DEGREE: u64 = 64;

fn config(msg: impl Into<String>) -> Error {
    Error::Config(msg.into())
}

fn perm(images: Vec<u32>) -> Permutation {
    Permutation::from_images(images).expect("constructed images form a bijection")
}

fn check_degree(name: &str, n: u64) -> Result<usize> {
    if n == 0 || n > MAX_DEGREE {
        return Err(config(format!("{name}: parameter {n} out of range 1..={MAX_DEGREE}")));
    }
    Ok(n as usize)
}

/// The regular cyclic group of order `n`.
pub fn cyclic(n: u64) -> Result<Group> {
    let n = check_degree("cyclic", n)?;
    let images: Vec<u32> = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
    Group::new(n, vec![perm(images)])
}

/// The symmetries of a regular `n`-gon, order `2n`.
pub fn dihedral(n: u64) -> Result<Group> {
    if n < 3 {
        return Err(config(format!("dihedral: n = {n} must be at least 3")));
    }
    let n = check_degree("dihedral", n)? as u32;
    let rotation = perm((0..n).map(|i| (i + 1) % n).collect());
    let reflection = perm((0..n).map(|i| (n - i) % n).collect());
    Group::new(n as usize, vec![rotation, reflection])
}

pub fn sym(n: u64) -> Result<Group> {
    let n = check_degree("sym", n)?;
    Ok(symmetric_group(n))
}

/// Generated by the 3-cycles `(1 2 k)`.
pub fn alt(n: u64) -> Result<Group> {
    let n = check_degree("alt", n)?;
    let gens: Vec<Permutation> = (2..n)
        .map(|k| {
            let mut images: Vec<u32> = (0..n as u32).collect();
            images[0] = 1;
            images[1] = k as u32;
            images[k] = 0;
            perm(images)
        })
        .collect();
    if gens.is_empty() {
        return Ok(Group::trivial(n));
    }
    Group::new(n, gens)
}

/// `C_p^k` on `k` disjoint `p`-cycles.
pub fn elem_abelian(p: u64, k: u64) -> Result<Group> {
    if !is_prime(p) {
        return Err(config(format!("elem_abelian: {p} is not prime")));
    }
    if k == 0 || p * k > MAX_DEGREE {
        return Err(config(format!("elem_abelian: degree {p}·{k} out of range 1..={MAX_DEGREE}")));
    }
    let (p, k) = (p as u32, k as u32);
    let n = p * k;
    let gens = (0..k)
        .map(|block| {
            let mut images: Vec<u32> = (0..n).collect();
            for i in 0..p {
                images[(block * p + i) as usize] = block * p + (i + 1) % p;
            }
            perm(images)
        })
        .collect();
    Group::new(n as usize, gens)
}

/// The quaternion group in its right regular representation.
pub fn q8() -> Result<Group> {
    let i = Permutation::parse_cycles(8, "(1 2 5 6)(3 8 7 4)")?;
    let j = Permutation::parse_cycles(8, "(1 3 5 7)(2 4 6 8)")?;
    Group::new(8, vec![i, j])
}

type Matrix = [[u32; 2]; 2];

/// The permutation of the nonzero vectors of `F_p²` induced by `v ↦ vA`.
fn on_vectors(f: &Field, a: &Matrix) -> Permutation {
    let q = f.q;
    let index = |x: u32, y: u32| x * q + y - 1;
    let mut images = vec![0; (q * q - 1) as usize];
    for x in 0..q {
        for y in 0..q {
            if x == 0 && y == 0 {
                continue;
            }
            let nx = f.add(f.mul(x, a[0][0]), f.mul(y, a[1][0]));
            let ny = f.add(f.mul(x, a[0][1]), f.mul(y, a[1][1]));
            images[index(x, y) as usize] = index(nx, ny);
        }
    }
    perm(images)
}

/// Points of the projective line: `(x : 1)` is point `x`, `(1 : 0)` is `q`.
fn projective_point(f: &Field, x: u32, y: u32) -> u32 {
    if y == 0 {
        f.q
    } else {
        f.mul(x, f.inv(y))
    }
}

fn on_projective_line(f: &Field, a: &Matrix) -> Permutation {
    let q = f.q;
    let images = (0..=q)
        .map(|pt| {
            let (x, y) = if pt == q { (1, 0) } else { (pt, 1) };
            let nx = f.add(f.mul(x, a[0][0]), f.mul(y, a[1][0]));
            let ny = f.add(f.mul(x, a[0][1]), f.mul(y, a[1][1]));
            projective_point(f, nx, ny)
        })
        .collect();
    perm(images)
}

/// Transvections `[[1, b], [0, 1]]` and `[[1, 0], [b, 1]]` for `b` in a basis
/// over the prime field; these generate `SL(2, q)`.
fn sl2_generators(f: &Field) -> Vec<Matrix> {
    f.basis().into_iter().flat_map(|b| [[[1, b], [0, 1]], [[1, 0], [b, 1]]]).collect()
}

/// `SL(2,3)` on the 8 nonzero vectors of `F_3²`.
pub fn sl23() -> Result<Group> {
    let f = Field::new(3)?;
    let gens = sl2_generators(&f).iter().map(|a| on_vectors(&f, a)).collect();
    Group::new(8, gens)
}

/// `GL(2,3)` on the 8 nonzero vectors of `F_3²`.
pub fn gl2_3() -> Result<Group> {
    let f = Field::new(3)?;
    let mut mats = sl2_generators(&f);
    mats.push([[2, 0], [0, 1]]);
    Group::new(8, mats.iter().map(|a| on_vectors(&f, a)).collect())
}

/// `SL(2,q)` acting on the `q + 1` points of the projective line; the
/// image is `PSL(2,q)`.
pub fn sl2(q: u64) -> Result<Group> {
    if !SL2_FIELDS.iter().any(|&f| f as u64 == q) {
        return Err(config(format!("sl2: q = {q} must be one of {SL2_FIELDS:?}")));
    }
    let f = Field::new(q as u32)?;
    let gens = sl2_generators(&f).iter().map(|a| on_projective_line(&f, a)).collect();
    Group::new(q as usize + 1, gens)
}

/// `SL(2, q) ⋊ ⟨φ⟩` on the projective line, `q = p^{p^e}`, where `φ` is the
/// Frobenius map `x ↦ x^p` on coordinates.
pub fn paper_example(p: u64, e: u64) -> Result<Group> {
    if !is_prime(p) {
        return Err(config(format!("paper_example: {p} is not prime")));
    }
    let q = p.checked_pow(e as u32).and_then(|k| u32::try_from(k).ok()).and_then(|k| p.checked_pow(k));
    let q = match q {
        Some(q) if e <= 4 && q <= 9 => q as u32,
        _ => return Err(config(format!("paper_example: p^(p^e) must be at most 9, got p = {p}, e = {e}"))),
    };
    let f = Field::new(q)?;
    let mut gens: Vec<Permutation> = sl2_generators(&f).iter().map(|a| on_projective_line(&f, a)).collect();
    let frobenius = (0..=q).map(|pt| if pt == q { q } else { f.pow(pt, p as u32) }).collect();
    gens.push(perm(frobenius));
    Group::new(q as usize + 1, gens)
}

/// The external direct product on the disjoint union of the domains.
pub fn direct_product(factors: &[Group]) -> Result<Group> {
    if factors.is_empty() {
        return Err(config("direct_product: needs at least one factor"));
    }
    let degree: usize = factors.iter().map(Group::degree).sum();
    let mut gens = Vec::new();
    let mut offset = 0;
    for g in factors {
        for x in g.generators() {
            let mut images: Vec<u32> = (0..degree as u32).collect();
            for (i, &im) in x.images().iter().enumerate() {
                images[offset + i] = im + offset as u32;
            }
            gens.push(perm(images));
        }
        offset += g.degree();
    }
    if gens.is_empty() {
        return Ok(Group::trivial(degree));
    }
    Group::new(degree, gens)
}

/// `(G × G) ⋊ C_2` on two copies of the domain, `C_2` swapping the copies.
pub fn swap_product(g: &Group) -> Result<Group> {
    let n = g.degree() as u32;
    let pair = direct_product(&[g.clone(), g.clone()])?;
    let mut gens = pair.generators().to_vec();
    gens.push(perm((0..2 * n).map(|i| (i + n) % (2 * n)).collect()));
    Group::new(2 * n as usize, gens)
}

fn factorial(n: u64) -> u128 {
    (1..=n as u128).product()
}

/// Closed-form order of a builtin with integer parameters, for validation.
pub fn closed_form_order(name: &str, args: &[u64]) -> Option<u128> {
    Some(match (name, args) {
        ("cyclic", [n]) => *n as u128,
        ("dihedral", [n]) => 2 * *n as u128,
        ("sym", [n]) => factorial(*n),
        ("alt", [n]) => (factorial(*n) / 2).max(1),
        ("elem_abelian", [p, k]) => (*p as u128).pow(*k as u32),
        ("q8", []) => 8,
        ("sl23", []) => 24,
        ("gl2_3", []) => 48,
        ("sl2", [q]) => {
            let q = *q as u128;
            q * (q * q - 1) / if q % 2 == 1 { 2 } else { 1 }
        }
        ("paper_example", [p, e]) => {
            let q = (*p as u128).pow((*p).pow(*e as u32) as u32);
            let psl = q * (q * q - 1) / if q % 2 == 1 { 2 } else { 1 };
            psl * (*p as u128).pow(*e as u32)
        }
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_match_closed_forms() {
        let cases: Vec<(&str, Vec<u64>, Group)> = vec![
            ("cyclic", vec![6], cyclic(6).unwrap()),
            ("dihedral", vec![5], dihedral(5).unwrap()),
            ("sym", vec![5], sym(5).unwrap()),
            ("alt", vec![5], alt(5).unwrap()),
            ("alt", vec![2], alt(2).unwrap()),
            ("elem_abelian", vec![3, 2], elem_abelian(3, 2).unwrap()),
            ("q8", vec![], q8().unwrap()),
            ("sl23", vec![], sl23().unwrap()),
            ("gl2_3", vec![], gl2_3().unwrap()),
            ("sl2", vec![4], sl2(4).unwrap()),
            ("sl2", vec![5], sl2(5).unwrap()),
            ("sl2", vec![7], sl2(7).unwrap()),
            ("sl2", vec![8], sl2(8).unwrap()),
            ("sl2", vec![9], sl2(9).unwrap()),
            ("paper_example", vec![2, 1], paper_example(2, 1).unwrap()),
        ];
        for (name, args, g) in cases {
            assert_eq!(Some(g.order()), closed_form_order(name, &args), "{name}{args:?}");
        }
    }

    #[test]
    fn products() {
        let a5 = alt(5).unwrap();
        let s = swap_product(&a5).unwrap();
        assert_eq!((s.degree(), s.order()), (10, 7200));
        let d = direct_product(&[cyclic(2).unwrap(), sym(3).unwrap()]).unwrap();
        assert_eq!((d.degree(), d.order()), (5, 12));
    }

    #[test]
    fn parameter_validation() {
        assert!(sl2(6).is_err());
        assert!(sl2(11).is_err());
        assert!(paper_example(3, 1).is_err());
        assert!(paper_example(4, 1).is_err());
        assert!(elem_abelian(4, 2).is_err());
        assert!(dihedral(2).is_err());
        assert!(cyclic(0).is_err());
    }
}
