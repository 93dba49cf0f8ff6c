//! The convolutive eta-products found among OEIS entries.

use crate::series::EtaProductSpec;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnownConvolutive {
    pub a_number: u32,
    pub spec: EtaProductSpec,
    pub m: u32,
}

impl KnownConvolutive {
    /// `A007096` style label.
    pub fn label(&self) -> String {
        format!("A{:06}", self.a_number)
    }
}

/// The seven primitive eta-products known to be 2- or 3-convolutive, in the
/// order they are usually listed.
pub fn known_convolutive() -> Vec<KnownConvolutive> {
    type Row = (u32, &'static [(u32, i32)], u32);
    let rows: [Row; 7] = [
        (7096, &[(1, -4), (2, 6), (4, -2)], 2),
        (103258, &[(1, -2), (2, 1), (4, 2), (8, -1)], 2),
        (102186, &[(1, -1), (3, -1), (4, 1), (6, 2), (12, -1)], 2),
        (94023, &[(1, -1), (6, 1), (10, 1), (15, -1)], 2),
        (128128, &[(1, -3), (2, 3), (3, 1), (6, -1)], 2),
        (98151, &[(1, -2), (2, 1), (3, 2), (6, -1)], 3),
        (385520, &[(1, -1), (2, 1), (3, -1), (4, -1), (6, 3), (12, -1)], 3),
    ];
    rows.into_iter()
        .map(|(a_number, pairs, m)| KnownConvolutive {
            a_number,
            spec: EtaProductSpec::from_pairs(pairs),
            m,
        })
        .collect()
}

/// The sign-alternated partners of the two 3-convolutive entries
/// (A132002 and A293306).
pub fn known_duals() -> Vec<(u32, u32)> {
    vec![(98151, 132002), (385520, 293306)]
}
