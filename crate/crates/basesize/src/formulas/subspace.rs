//! Subspace actions of SL_n, Sp_n and SO_n at a single characteristic.

use super::{BaseTriple, Flavor, FormulaError, GroupFamily, Interval};

fn delta(a: usize, b: usize) -> u32 {
    u32::from(a == b)
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

fn invalid(msg: impl Into<String>) -> FormulaError {
    FormulaError::InvalidSpec(msg.into())
}

fn incompatible(msg: impl Into<String>) -> FormulaError {
    FormulaError::CharIncompatible(msg.into())
}

/// Checks that the natural module dimension gives a simple classical group
/// of the requested family.
pub(crate) fn validate_classical_n(family: GroupFamily, n: usize) -> Result<(), FormulaError> {
    match family {
        GroupFamily::SL if n >= 2 => Ok(()),
        GroupFamily::Sp if n >= 4 && n.is_multiple_of(2) => Ok(()),
        GroupFamily::SO if n >= 7 => Ok(()),
        GroupFamily::SL => Err(invalid(format!("SL_n requires n >= 2, got {n}"))),
        GroupFamily::Sp => Err(invalid(format!("Sp_n requires even n >= 4, got {n}"))),
        GroupFamily::SO => Err(invalid(format!("SO_n requires n >= 7, got {n}"))),
        _ => Err(invalid(format!("{family} is not classical"))),
    }
}

/// Evaluates a subspace action at characteristic `p`.
pub(crate) fn at(family: GroupFamily, n: usize, d: usize, flavor: Option<Flavor>, p: u32) -> Result<BaseTriple, FormulaError> {
    if d == 0 {
        return Err(invalid("subspace dimension d must be positive"));
    }
    if d >= n {
        return Err(invalid(format!("subspace dimension d = {d} must be below n = {n}")));
    }
    match family {
        GroupFamily::SL => linear(n, d, flavor),
        GroupFamily::Sp => symplectic(n, d, flavor, p),
        GroupFamily::SO => orthogonal(n, d, flavor, p),
        _ => Err(invalid(format!("subspace actions are defined for classical groups, got {family}"))),
    }
}

fn linear(n: usize, d: usize, flavor: Option<Flavor>) -> Result<BaseTriple, FormulaError> {
    validate_classical_n(GroupFamily::SL, n)?;
    if flavor.is_some() {
        return Err(invalid("SL_n subspaces carry no form flavor"));
    }
    if 2 * d > n {
        return Err(invalid(format!("d = {d} exceeds n/2 = {n}/2; use the dual action on {}-spaces", n - d)));
    }
    let k = ceil_div(n, d) as u32;
    if n.is_multiple_of(d) {
        let (eps, why) = if d == 1 {
            (1, "d = 1")
        } else if 2 * d == n {
            (3, "1 < d = n/2")
        } else {
            (2, "1 < d < n/2")
        };
        Ok(BaseTriple::all(k + eps, format!("linear, d divides n, {why} (k + epsilon, epsilon = {eps})")))
    } else {
        let iv = Interval::new(k + 1, k + 2 + delta(k as usize, 3));
        Ok(BaseTriple::intervals(iv, iv, iv, "linear, d does not divide n (k + 1 .. k + 2 + delta(3,k))")
            .with_note("b0 = b = b1 holds, but the common value is only known to lie in the interval"))
    }
}

fn symplectic(n: usize, d: usize, flavor: Option<Flavor>, p: u32) -> Result<BaseTriple, FormulaError> {
    validate_classical_n(GroupFamily::Sp, n)?;
    let flavor = flavor.ok_or_else(|| invalid("Sp_n subspaces need a flavor (nondeg, totally_singular or On_in_Spn)"))?;
    if flavor == Flavor::OnInSpn {
        if p != 2 {
            return Err(incompatible("O_n < Sp_n is a subspace-type stabilizer only when p = 2"));
        }
        let nn = n as u32;
        return Ok(BaseTriple::points(nn, nn, nn + 1, "symplectic, H = O_n, p = 2"));
    }
    if 2 * d > n {
        return Err(invalid(format!("d = {d} exceeds n/2")));
    }
    let k = ceil_div(n, d) as u32;
    match flavor {
        Flavor::Nondeg => {
            if d % 2 == 1 {
                return Err(invalid("non-degenerate subspaces of a symplectic space have even dimension"));
            }
            if 2 * d == n {
                if n == 4 {
                    return Ok(BaseTriple::points(4, 4, 5, "symplectic, non-degenerate d = n/2 = 2 (Sp_2 wr S_2 in Sp_4)")
                        .with_note("imprimitive: the stabilizer of {U, U^perp} contains H with index 2; values of the wreath action"));
                }
                let v = 3 + delta(n, 4);
                return Ok(BaseTriple::all(v, "symplectic, non-degenerate d = n/2 (3 + delta(4,n))")
                    .with_note("imprimitive action: H has index 2 in the stabilizer of {U, U^perp}"));
            }
            if n == 6 && d == 2 {
                return Ok(BaseTriple::all(4, "symplectic, n = 6, d = 2"));
            }
            Ok(BaseTriple::all(k, "symplectic, generic case (k)"))
        }
        Flavor::TotallySingular => {
            if 2 * d == n {
                let b1 = 5 - u32::from(p == 2);
                return Ok(BaseTriple::points(4, 4, b1, "symplectic, totally singular, d = n/2 (b1 = 5 - delta(2,p))"));
            }
            if n == 6 && d == 2 {
                return Ok(BaseTriple::all(4, "symplectic, n = 6, d = 2"));
            }
            Ok(BaseTriple::all(k, "symplectic, generic case (k)"))
        }
        Flavor::NonsingularOneSpace => Err(invalid("non-singular 1-spaces are an orthogonal flavor")),
        Flavor::OnInSpn => unreachable!(),
    }
}

fn c_of(n: usize) -> u32 {
    match n {
        8 => 7,
        12 => 6,
        _ => 5,
    }
}

fn orthogonal(n: usize, d: usize, flavor: Option<Flavor>, p: u32) -> Result<BaseTriple, FormulaError> {
    let flavor = flavor.ok_or_else(|| invalid("SO_n subspaces need a flavor (nondeg, totally_singular or nonsingular_1space)"))?;
    let one_space = d == 1 && matches!(flavor, Flavor::Nondeg | Flavor::NonsingularOneSpace);
    if one_space {
        if n < 3 || n == 4 {
            return Err(invalid(format!("SO_{n} is not simple")));
        }
    } else {
        validate_classical_n(GroupFamily::SO, n)?;
    }
    if 2 * d > n {
        return Err(invalid(format!("d = {d} exceeds n/2")));
    }
    let odd = n % 2 == 1;
    let nn = n as u32;
    match flavor {
        Flavor::NonsingularOneSpace if p == 2 => {
            if d != 1 {
                return Err(invalid("non-singular subspaces are 1-dimensional"));
            }
            if odd {
                Ok(BaseTriple::points(nn - 1, nn - 1, nn, "orthogonal, p = 2, n odd, non-singular 1-spaces (n - 1, n - 1, n)"))
            } else {
                Ok(BaseTriple::all(nn - 1, "orthogonal, p = 2, non-singular 1-spaces (n - 1)"))
            }
        }
        Flavor::NonsingularOneSpace => {
            if d != 1 {
                return Err(invalid("non-singular subspaces are 1-dimensional"));
            }
            nondeg(n, 1, p).map(|t| t.with_note("for p != 2 non-singular and non-degenerate 1-spaces coincide"))
        }
        Flavor::Nondeg => {
            if p == 2 && odd {
                return Err(incompatible("SO_n with n odd and p = 2: only non-singular 1-spaces are admitted"));
            }
            nondeg(n, d, p)
        }
        Flavor::TotallySingular => {
            if p == 2 && odd {
                return Err(incompatible("SO_n with n odd requires p != 2"));
            }
            totally_singular(n, d)
        }
        Flavor::OnInSpn => Err(invalid("O_n in Sp_n is a symplectic flavor")),
    }
}

fn nondeg(n: usize, d: usize, p: u32) -> Result<BaseTriple, FormulaError> {
    if p == 2 && d > 1 && d % 2 == 1 {
        return Err(invalid("for p = 2 non-degenerate subspaces of dimension > 1 must be even-dimensional"));
    }
    let k = ceil_div(n, d);
    let eps = u32::from(n.is_multiple_of(2));
    if 2 * d == n {
        if p == 2 && !n.is_multiple_of(4) {
            return Err(invalid("for p = 2 the non-degenerate n/2-space case requires n divisible by 4"));
        }
        return Ok(BaseTriple::points(2, 2, 3, "orthogonal, non-degenerate d = n/2")
            .with_note("imprimitive action: H has index 2 in the stabilizer of {U, U^perp}"));
    }
    if n == (k - 1) * d + 1 {
        let k = k as u32;
        return Ok(BaseTriple::points(
            k - 1,
            k - 1,
            k - eps,
            format!("orthogonal, non-degenerate, n = (k - 1)d + 1 (k - 1, k - 1, k - epsilon), epsilon = {eps}"),
        ));
    }
    Ok(BaseTriple::all(k as u32, "orthogonal, generic case (k)"))
}

fn totally_singular(n: usize, d: usize) -> Result<BaseTriple, FormulaError> {
    let k = ceil_div(n, d);
    if 2 * d == n {
        if n == 10 {
            return Ok(BaseTriple::intervals(
                Interval::point(5),
                Interval::new(5, 6),
                Interval::new(5, 6),
                "orthogonal, totally singular, n = 10, d = 5",
            ));
        }
        let c = c_of(n);
        return Ok(BaseTriple::all(c, format!("orthogonal, totally singular, d = n/2 (c({n}) = {c})")));
    }
    if k == 3 {
        let v = 4 - delta(n, 3 * d);
        return Ok(BaseTriple::all(v, "orthogonal, totally singular, k = 3 (4 - delta(n,3d))"));
    }
    if k >= 4 && n == (k - 1) * d + 1 {
        let eps = u32::from(n.is_multiple_of(2));
        let k = k as u32;
        return Ok(BaseTriple::points(
            k - 1,
            k - 1,
            k - eps,
            format!("orthogonal, totally singular, n = (k - 1)d + 1, k >= 4 (k - 1, k - 1, k - epsilon), epsilon = {eps}"),
        ));
    }
    Ok(BaseTriple::all(k as u32, "orthogonal, generic case (k)"))
}
