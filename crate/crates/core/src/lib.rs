pub mod chartab;
pub mod dade;
pub mod ffla;
pub mod gmod;
pub mod grp;
pub mod scen;
