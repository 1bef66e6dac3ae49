pub mod alexander;
pub mod cli;
pub mod group;
pub mod harvey;
pub mod quotients;
pub mod ring;
