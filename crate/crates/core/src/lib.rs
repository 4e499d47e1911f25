pub mod arith;
pub mod cover;
pub mod elliptic;
pub mod family;
pub mod genus2;
pub mod trinomial;
