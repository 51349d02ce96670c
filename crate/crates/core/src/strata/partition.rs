//! Integer partitions, refinement, and the dimension count for the gluing
//! maps ξ_μ.

use crate::error::{Error, Result};

/// All partitions of `n` into positive parts, each weakly increasing, in
/// lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Vec<u32>> {
    fn rec(left: u32, min: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for part in min..=left {
            // the remainder must be 0 or at least `part` to stay increasing
            let rest = left - part;
            if rest != 0 && rest < part {
                continue;
            }
            cur.push(part);
            rec(rest, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, 1, &mut Vec::new(), &mut out);
    out
}

/// Whether `fine` refines `coarse`: the parts of `fine` can be grouped into
/// blocks whose sums are exactly the parts of `coarse`.
pub fn is_refinement(fine: &[u32], coarse: &[u32]) -> bool {
    if fine.iter().sum::<u32>() != coarse.iter().sum::<u32>() || fine.len() < coarse.len() {
        return false;
    }
    let mut parts = fine.to_vec();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    let mut room = coarse.to_vec();
    fn place(i: usize, parts: &[u32], room: &mut [u32]) -> bool {
        if i == parts.len() {
            return room.iter().all(|&r| r == 0);
        }
        for k in 0..room.len() {
            // skip blocks with the same remaining room as an earlier one
            if room[k] < parts[i] || room[..k].contains(&room[k]) {
                continue;
            }
            room[k] -= parts[i];
            if place(i + 1, parts, room) {
                return true;
            }
            room[k] += parts[i];
        }
        false
    }
    place(0, &parts, &mut room)
}

/// Refinement that is not the identity.
pub fn is_strict_refinement(fine: &[u32], coarse: &[u32]) -> bool {
    let mut a = fine.to_vec();
    let mut b = coarse.to_vec();
    a.sort_unstable();
    b.sort_unstable();
    a != b && is_refinement(fine, coarse)
}

fn check_partition_of(mu: &[u32], n: u32) -> Result<()> {
    if mu.is_empty() || mu.contains(&0) || mu.iter().sum::<u32>() != n {
        return Err(Error::InvalidPartition(format!(
            "{mu:?} is not a partition of {n} into positive parts"
        )));
    }
    Ok(())
}

/// dim of M^ct_{g_1,1} × ... × M^ct_{g_l,1} × M^cycle_{1,l}, which equals
/// dim M_g^{≤1} - (l+1) = 3g - 3 - (l+1).
pub fn xi_domain_dimension(g: u32, mu: &[u32]) -> Result<i64> {
    if g < 2 {
        return Err(Error::InvalidGenus {
            g: g as usize,
            min: 2,
        });
    }
    check_partition_of(mu, g - 1)?;
    let l = mu.len() as i64;
    let domain: i64 = mu.iter().map(|&gi| 3 * (gi as i64 - 1) + 1).sum::<i64>() + (l - 1);
    let codim_form = (3 * g as i64 - 3) - (l + 1);
    if domain != codim_form {
        return Err(Error::Inconsistent(format!(
            "dimension mismatch for g={g}, mu={mu:?}: {domain} vs {codim_form}"
        )));
    }
    Ok(domain)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_partitions() {
        assert_eq!(partitions_of(1), vec![vec![1]]);
        assert_eq!(
            partitions_of(4),
            vec![vec![1, 1, 1, 1], vec![1, 1, 2], vec![1, 3], vec![2, 2], vec![4]]
        );
        assert_eq!(partitions_of(0), vec![Vec::<u32>::new()]);
        let ten = partitions_of(10);
        assert!(ten.contains(&vec![1, 2, 3, 4]));
        assert!(ten.contains(&vec![10]));
    }

    // brute force: all weakly increasing sequences by filtering compositions
    fn partitions_brute(n: u32) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        for mask in 0u32..(1 << (n.saturating_sub(1))) {
            let mut parts = Vec::new();
            let mut cur = 1;
            for i in 0..n.saturating_sub(1) {
                if mask & (1 << i) != 0 {
                    parts.push(cur);
                    cur = 1;
                } else {
                    cur += 1;
                }
            }
            parts.push(cur);
            if parts.windows(2).all(|w| w[0] <= w[1]) {
                out.push(parts);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn matches_brute_force() {
        for n in 1..=14 {
            assert_eq!(partitions_of(n), partitions_brute(n), "n = {n}");
        }
        assert_eq!(partitions_of(20).len(), 627);
    }

    #[test]
    fn refinement() {
        assert!(is_refinement(&[1, 1, 2], &[2, 2]));
        assert!(is_refinement(&[1, 2, 3], &[3, 3]));
        assert!(!is_refinement(&[2, 2], &[1, 3]));
        assert!(is_refinement(&[4], &[4]));
        assert!(!is_strict_refinement(&[4], &[4]));
        assert!(is_strict_refinement(&[1, 3], &[4]));
        assert!(!is_refinement(&[4], &[1, 3]));
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(xi_domain_dimension(2, &[1]).unwrap(), 1);
        assert_eq!(xi_domain_dimension(11, &[1, 2, 3, 4]).unwrap(), 25);
        assert_eq!(xi_domain_dimension(11, &[10]).unwrap(), 28);
        assert!(xi_domain_dimension(11, &[1, 2]).is_err());
        assert!(xi_domain_dimension(1, &[]).is_err());
    }

    #[test]
    fn dimension_identity_for_all_small_genera() {
        for g in 2..=20 {
            for mu in partitions_of(g - 1) {
                let l = mu.len() as i64;
                assert_eq!(xi_domain_dimension(g, &mu).unwrap(), 3 * g as i64 - 4 - l);
            }
        }
    }
}
