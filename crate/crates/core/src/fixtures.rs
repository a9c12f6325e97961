//! Built-in reference instance: the four-element table whose values are the
//! minimum number of 3-interchanges needed to sort each permutation.
//!
//! Under this objective 3-search always reaches `(1,2,3,4)` while 2-search
//! stalls at points such as `(4,3,1,2)`.

use crate::error::Result;
use crate::objective::{Objective, Value};
use crate::perm::{PermSpace, Permutation};

/// Reference values in the table's own row order (rows 1 through 24).
pub const TABLE1: [(&str, i64); 24] = [
    ("3124", 1),
    ("3142", 2),
    ("3214", 1),
    ("3241", 2),
    ("3412", 2),
    ("3421", 2),
    ("4123", 2),
    ("4132", 2),
    ("4213", 2),
    ("4231", 3),
    ("4312", 2),
    ("4321", 3),
    ("1234", 0),
    ("1243", 1),
    ("1324", 1),
    ("1342", 1),
    ("1423", 1),
    ("1432", 1),
    ("2134", 1),
    ("2143", 2),
    ("2314", 1),
    ("2341", 2),
    ("2413", 2),
    ("2431", 2),
];

pub const TABLE1_ID: &str = "table1";

/// The reference table as a table objective. Its unique minimizer is the
/// identity.
pub fn table1_objective() -> Objective {
    table_objective_from_rows(&TABLE1).expect("reference table is complete")
}

/// Builds a table objective from `(digit form, value)` rows; used for the
/// reference table and for corrupted copies of it in fault-injection checks.
pub fn table_objective_from_rows(rows: &[(&str, i64)]) -> Result<Objective> {
    let entries = rows
        .iter()
        .map(|(k, v)| Ok((k.parse::<Permutation>()?, Value::from_int(*v))))
        .collect::<Result<Vec<_>>>()?;
    Objective::table_from_entries(TABLE1_ID, 4, entries, None)
}

/// 1-based row number of `p` in the reference table layout: lexicographic
/// order rotated by half, so permutations with a large leading element come
/// first. For `n = 4` this puts `(3,1,2,4)` in row 1 and `(1,2,3,4)` in
/// row 13.
pub fn table_row(space: &PermSpace, p: &Permutation) -> Result<usize> {
    let rank = space.rank(p)?;
    Ok((rank + space.len() / 2) % space.len() + 1)
}

/// Inverse of [`table_row`].
pub fn table_row_permutation(space: &PermSpace, row: usize) -> Result<Permutation> {
    let len = space.len();
    let rank = (row.wrapping_sub(1) % len.max(1) + len - len / 2) % len;
    space.unrank(rank)
}
