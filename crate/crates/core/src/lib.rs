pub mod qarith;
pub mod weightlat;
pub mod presentations;
pub mod fockrep;
pub mod bubblecalc;
pub mod harness;
