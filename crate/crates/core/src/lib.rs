pub mod algebra;
pub mod blockseq;
pub mod cli;
pub mod error;
pub mod filters;
pub mod fin;
pub mod games;
pub mod oscillation;
pub mod sample;
pub mod verify;
pub mod wire;
