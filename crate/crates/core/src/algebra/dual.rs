use crate::error::Result;

use super::two_algebra::TwoAlgebra;

/// The dual 2-algebra on the dual basis: multiplication and comultiplication
/// trade places, as do unit and counit, and each (co)involution becomes the
/// transpose of the other.
pub fn dual(a: &TwoAlgebra) -> Result<TwoAlgebra> {
    a.check_dims()?;
    Ok(TwoAlgebra {
        dim: a.dim,
        labels: a.labels.clone(),
        mult: a.comult.permute_indices(|k, i, j| (i, j, k)),
        unit: a.counit.clone(),
        comult: a.mult.permute_indices(|j, k, i| (i, j, k)),
        counit: a.unit.clone(),
        invol: a.coinvol.transpose(),
        coinvol: a.invol.transpose(),
        weakened: a.weakened,
    })
}
