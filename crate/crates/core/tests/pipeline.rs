use extlift::free::normal_word_counts;
use extlift::parse::parse_ideal;
use extlift::{
    groebner_ext, hilbert_ext, hilbert_rational, initial_ideal_ext, is_squeezed, lift_groebner,
    obstructions_resolve, BigInt,
};

fn certify(text: &str) -> (bool, Vec<u128>) {
    let file = parse_ideal(text).unwrap();
    let ideal = file.ext_ideal().unwrap();
    let n = ideal.n();
    let gb = groebner_ext(&ideal);
    let lift = lift_groebner(&gb).unwrap();
    assert!(obstructions_resolve(&lift.candidate()).resolves());
    let counts: Vec<u128> = normal_word_counts(&lift.initial_ideal(), n + 1)
        .into_iter()
        .map(|c| u128::try_from(c).unwrap())
        .collect();
    assert_eq!(&counts[..=n], &hilbert_ext(&ideal)[..=n]);
    assert_eq!(counts[n + 1], 0);
    (is_squeezed(&initial_ideal_ext(&gb)).unwrap(), counts)
}

#[test]
fn quadric_from_file_text() {
    let (squeezed, counts) = certify("vars: 3\n2*x1*x2 - 5*x1*x3 + 7*x2*x3\n");
    assert!(squeezed);
    assert_eq!(counts, vec![1, 3, 2, 0, 0]);
}

#[test]
fn monomial_x1x4_is_not_squeezed() {
    let (squeezed, counts) = certify("vars: 4\nx1*x4\n");
    assert!(!squeezed);
    assert_eq!(counts, vec![1, 4, 5, 2, 0, 0]);
}

#[test]
fn lifted_series_is_the_exterior_hilbert_polynomial() {
    let file = parse_ideal("vars: 4\nx1x2 + x3x4\nx1x3\n").unwrap();
    let ideal = file.ext_ideal().unwrap();
    let lift = lift_groebner(&groebner_ext(&ideal)).unwrap();
    let series = hilbert_rational(&lift.initial_ideal());
    assert!(series.is_polynomial());
    let expected: Vec<BigInt> = hilbert_ext(&ideal).into_iter().map(BigInt::from).collect();
    assert_eq!(series.expand(expected.len() - 1), expected);
}
