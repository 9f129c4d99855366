//! Certificates that a connected zero-dimensional scheme fails the Hasse
//! principle for zero-cycles of degree 1.
//!
//! For a proper subgroup `H < G`, the Fein–Kantor–Schacher theorem
//! guarantees an element of prime-power order avoiding every conjugate
//! `t⁻¹Ht`. For such an element the quantity
//!
//! ```text
//! gcd over t in G of min { k ≥ 1 : g^k ∈ t⁻¹Ht }
//! ```
//!
//! is divisible by the prime and in particular exceeds 1 — an explicit
//! obstruction: the coset space `G/H` has local points of degree
//! divisible by that index at a positive density of places, but never a
//! global zero-cycle of degree 1.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::perm::{PermutationGroup, SubgroupHandle};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HasseError {
    #[error("subgroup must be proper")]
    NotProper,
    #[error("no prime-power witness found; this contradicts Fein–Kantor–Schacher and indicates a bug")]
    InternalExhaustion,
}

/// A verified failure certificate for one pair `(G, H)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HasseCertificate {
    /// Element index of the witness in the group enumeration.
    pub witness: usize,
    /// The witness in cycle notation.
    pub witness_cycles: String,
    pub witness_order: u64,
    pub prime: u64,
    pub certified_index: u64,
}

/// `gcd over t of the least k ≥ 1 with g^k ∈ t⁻¹Ht`. This equals the
/// combinatorial index of the coset-space algebra `G/H` at `g`: the
/// orbit of the coset `H·t` under `g` has size exactly that least `k`.
pub fn certified_index(group: &PermutationGroup, h: &SubgroupHandle, g: usize) -> u64 {
    // powers of g up to its order
    let ord = group.element_order(g) as usize;
    let mut powers = Vec::with_capacity(ord);
    let mut p = g;
    for _ in 0..ord {
        powers.push(p);
        p = group.mul(p, g);
    }
    let mut acc: u64 = 0;
    for t in 0..group.order() {
        let tinv = group.inverse_of(t);
        let mut least = None;
        for (k, &gk) in powers.iter().enumerate() {
            // g^k ∈ t⁻¹Ht  ⇔  t·g^k·t⁻¹ ∈ H
            if h.contains(group.mul(group.mul(t, gk), tinv)) {
                least = Some((k + 1) as u64);
                break;
            }
        }
        // k = ord always works because g^ord is the identity.
        acc = num::integer::gcd(acc, least.expect("identity power lies in H"));
        if acc == 1 {
            return 1;
        }
    }
    acc
}

fn smallest_prime_factor(n: u64) -> Option<u64> {
    if n < 2 {
        return None;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return Some(d);
        }
        d += 1;
    }
    Some(n)
}

fn prime_power_base(n: u64) -> Option<u64> {
    let p = smallest_prime_factor(n)?;
    let mut m = n;
    while m % p == 0 {
        m /= p;
    }
    (m == 1).then_some(p)
}

/// Searches for a Fein–Kantor–Schacher witness: the first element of
/// prime-power order outside every conjugate of `h`, taking candidates
/// sorted by (prime, order, enumeration index) so certificates are
/// reproducible.
///
/// Such an element exists for every proper subgroup, so
/// [`HasseError::InternalExhaustion`] signals a bug rather than a
/// mathematical outcome.
pub fn fks_witness(
    group: &PermutationGroup,
    h: &SubgroupHandle,
) -> Result<HasseCertificate, HasseError> {
    if h.order() == group.order() {
        return Err(HasseError::NotProper);
    }
    // Union of all conjugates t⁻¹Ht.
    let mut in_conjugate = vec![false; group.order()];
    for t in 0..group.order() {
        let tinv = group.inverse_of(t);
        for &m in h.members() {
            in_conjugate[group.mul(group.mul(tinv, m), t)] = true;
        }
    }
    let mut candidates: Vec<(u64, u64, usize)> = (0..group.order())
        .filter_map(|e| {
            let ord = group.element_order(e);
            prime_power_base(ord).map(|p| (p, ord, e))
        })
        .collect();
    candidates.sort_unstable();
    for (p, ord, e) in candidates {
        if !in_conjugate[e] {
            let certified = certified_index(group, h, e);
            assert!(certified > 1, "witness avoids H, so no power below ord(g) can re-enter at k = 1");
            assert_eq!(certified % p, 0, "certified index is a power of the witness prime");
            return Ok(HasseCertificate {
                witness: e,
                witness_cycles: group.element(e).to_string(),
                witness_order: ord,
                prime: p,
                certified_index: certified,
            });
        }
    }
    Err(HasseError::InternalExhaustion)
}

/// The subgroup family used for corpus sweeps: closures of every subset
/// of at most two elements. This covers all cyclic subgroups and is rich
/// enough for the desk-scale verification of the Hasse-principle
/// statement; full subgroup lattices are not needed.
pub fn subgroup_family(group: &PermutationGroup) -> Vec<SubgroupHandle> {
    let n = group.order();
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    let mut push = |h: SubgroupHandle, out: &mut Vec<SubgroupHandle>| {
        if seen.insert(h.members().to_vec()) {
            out.push(h);
        }
    };
    push(group.trivial_subgroup(), &mut out);
    for a in 0..n {
        push(group.subgroup_from_indices(&[a]), &mut out);
        for b in (a + 1)..n {
            push(group.subgroup_from_indices(&[a, b]), &mut out);
        }
    }
    out.sort_by(|x, y| {
        (x.order(), x.members().to_vec()).cmp(&(y.order(), y.members().to_vec()))
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{Permutation, DEFAULT_ORDER_CAP};

    fn cycles(degree: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(degree, s).unwrap()
    }

    fn group(degree: usize, gens: &[&str]) -> PermutationGroup {
        let gens: Vec<Permutation> = gens.iter().map(|s| cycles(degree, s)).collect();
        PermutationGroup::generate(degree, &gens, DEFAULT_ORDER_CAP).unwrap()
    }

    #[test]
    fn a4_mod_c2_certificate() {
        let g = group(4, &["(0 1 2)", "(0 1)(2 3)"]);
        let h = g.subgroup(&[cycles(4, "(0 1)(2 3)")]).unwrap();
        let cert = fks_witness(&g, &h).unwrap();
        assert_eq!(cert.prime, 3);
        assert_eq!(cert.certified_index, 3);
        assert_eq!(cert.witness_order, 3);
    }

    #[test]
    fn c4_mod_square_certificate() {
        let g = group(4, &["(0 1 2 3)"]);
        let sq = cycles(4, "(0 1 2 3)").compose(&cycles(4, "(0 1 2 3)"));
        let h = g.subgroup(&[sq]).unwrap();
        let cert = fks_witness(&g, &h).unwrap();
        assert_eq!(cert.prime, 2);
        assert_eq!(cert.certified_index, 2);
        assert_eq!(cert.witness_order, 4, "witness is a generator of C4");
    }

    #[test]
    fn s3_mod_transposition_certificate() {
        let g = group(3, &["(0 1 2)", "(0 1)"]);
        let h = g.subgroup(&[cycles(3, "(0 1)")]).unwrap();
        let cert = fks_witness(&g, &h).unwrap();
        assert_eq!(cert.prime, 3);
        assert_eq!(cert.certified_index, 3);
    }

    #[test]
    fn certified_index_basics() {
        let g = group(4, &["(0 1 2)", "(0 1)(2 3)"]);
        let h = g.subgroup(&[cycles(4, "(0 1)(2 3)")]).unwrap();
        assert_eq!(certified_index(&g, &h, 0), 1, "identity");
        let in_h = g.element_index(&cycles(4, "(0 1)(2 3)")).unwrap();
        assert_eq!(certified_index(&g, &h, in_h), 1, "members of H see k = 1 at t = e");
        let three = g.element_index(&cycles(4, "(0 1 2)")).unwrap();
        assert_eq!(certified_index(&g, &h, three), 3);
    }

    #[test]
    fn full_subgroup_is_rejected() {
        let g = group(3, &["(0 1 2)"]);
        let h = g.full_subgroup();
        assert_eq!(fks_witness(&g, &h), Err(HasseError::NotProper));
    }

    #[test]
    fn family_contains_cyclic_subgroups() {
        let g = group(4, &["(0 1 2)", "(0 1)(2 3)"]);
        let family = subgroup_family(&g);
        // A4: 1 trivial + 3 C2 + 4 C3 + 1 V4 + 1 A4 itself = 10
        assert_eq!(family.len(), 10);
        let orders: Vec<usize> = family.iter().map(|h| h.order()).collect();
        assert_eq!(orders, vec![1, 2, 2, 2, 3, 3, 3, 3, 4, 12]);
        for h in &family {
            assert_eq!(g.order() % h.order(), 0, "Lagrange");
        }
    }
}
