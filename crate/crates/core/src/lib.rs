pub mod combinatorics;
pub mod exact;
pub mod partitions;
pub mod symfun;
pub mod jack;
pub mod shifted;
pub mod stanley;
pub mod zonal;
pub mod hooktab;
pub mod cli;
