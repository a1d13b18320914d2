//! Multipartitions of families 0/s/ss, standard tableaux, diagonal-set
//! bookkeeping, Z2-vectors and the triple indices labelling idempotents.

mod multipartition;
mod perm;
mod tableau;
mod tri;
mod z2;

pub use multipartition::{
    enumerate_multipartitions, partitions, strict_partitions, Box_, CompLabel, Family, Multipartition,
};
pub use perm::Perm;
pub use tableau::{enumerate_std_tableaux, initial_tableaux, DiagonalData, StdTableau};
pub use tri::{enumerate_tri, restrict_tri, TriIndex};
pub use z2::Z2Vector;
