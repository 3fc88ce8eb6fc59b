//! Frozen csv renderings of the eight published tables, eight rows each.
//! The verify suite and the acceptance tests compare live output against
//! these bytes.

use kstates_core::tables::TableName;

pub const BN0K: &str = include_str!("../goldens/bn0k.csv");
pub const BN1K: &str = include_str!("../goldens/bn1k.csv");
pub const BN2K: &str = include_str!("../goldens/bn2k.csv");
pub const BNNK: &str = include_str!("../goldens/bnnk.csv");
pub const BNR1: &str = include_str!("../goldens/bnr1.csv");
pub const BNR2: &str = include_str!("../goldens/bnr2.csv");
pub const LEADING: &str = include_str!("../goldens/leading.csv");
pub const DEGREE: &str = include_str!("../goldens/degree.csv");

pub fn golden_csv(name: TableName) -> &'static str {
    match name {
        TableName::Bn0k => BN0K,
        TableName::Bn1k => BN1K,
        TableName::Bn2k => BN2K,
        TableName::Bnnk => BNNK,
        TableName::Bnr1 => BNR1,
        TableName::Bnr2 => BNR2,
        TableName::Leading => LEADING,
        TableName::Degree => DEGREE,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn goldens_have_eight_lf_terminated_rows() {
        for name in TableName::ALL {
            let text = golden_csv(name);
            assert!(text.ends_with('\n'), "{name} missing final newline");
            assert!(!text.contains('\r'), "{name} contains CR");
            assert_eq!(text.lines().count(), 8, "{name} row count");
        }
    }
}
