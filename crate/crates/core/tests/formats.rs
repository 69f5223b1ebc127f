use detcert::format::{parse_matrix, serialize_matrix, Format, ParsedMatrix, PbmMode};
use detcert::{Matrix01, MatrixPM1};
use proptest::prelude::*;

fn matrix_strategy() -> impl Strategy<Value = ParsedMatrix> {
    (1usize..=6, prop::bool::ANY).prop_flat_map(|(n, pm)| {
        prop::collection::vec(prop::bool::ANY, n * n).prop_map(move |bits| {
            if pm {
                let e = bits.into_iter().map(|b| if b { 1 } else { -1 }).collect();
                ParsedMatrix::PlusMinus(MatrixPM1::new(n, e).unwrap())
            } else {
                ParsedMatrix::ZeroOne(Matrix01::new(n, bits.into_iter().map(u8::from).collect()).unwrap())
            }
        })
    })
}

fn formats_for(m: &ParsedMatrix) -> [Format; 2] {
    match m {
        ParsedMatrix::ZeroOne(_) => [Format::Grid01, Format::Pbm(PbmMode::ZeroOne)],
        ParsedMatrix::PlusMinus(_) => [Format::GridPm, Format::Pbm(PbmMode::PlusMinus)],
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn parse_inverts_serialize(m in matrix_strategy()) {
        for f in formats_for(&m) {
            let bytes = serialize_matrix(&m, f).unwrap();
            prop_assert_eq!(parse_matrix(&bytes, f).unwrap(), m.clone());
        }
    }

    #[test]
    fn pbm_bits_agree_across_modes(m in matrix_strategy()) {
        // The same image read in the other mode maps white pixels 0 <-> -1.
        let [_, pbm] = formats_for(&m);
        let bytes = serialize_matrix(&m, pbm).unwrap();
        let other = match pbm {
            Format::Pbm(PbmMode::ZeroOne) => Format::Pbm(PbmMode::PlusMinus),
            _ => Format::Pbm(PbmMode::ZeroOne),
        };
        let reread = parse_matrix(&bytes, other).unwrap();
        prop_assert_eq!(serialize_matrix(&reread, other).unwrap(), bytes);
    }
}

#[test]
fn large_orders_round_trip() {
    let n = 101;
    let entries = (0..n * n).map(|k| if (k * 7 + k / n) % 3 == 0 { -1 } else { 1 }).collect();
    let m = ParsedMatrix::PlusMinus(MatrixPM1::new(n, entries).unwrap());
    for f in [Format::GridPm, Format::Pbm(PbmMode::PlusMinus)] {
        let bytes = serialize_matrix(&m, f).unwrap();
        assert_eq!(parse_matrix(&bytes, f).unwrap(), m);
    }
}
