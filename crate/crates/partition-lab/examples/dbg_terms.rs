use astro_float::Consts;
use partition_lab::pfn::{rademacher_term, rademacher_p};
use partition_lab::real::{format_fixed, bits_for_digits};

fn main() {
    let mut cc = Consts::new().unwrap();
    let _ = bits_for_digits(40);
    for k in 1..=8u64 {
        let t = rademacher_term(200, k, 40).unwrap();
        println!("k={k}: {}", format_fixed(&t, 6, &mut cc));
    }
    let r = rademacher_p(200, Some(8), 40).unwrap();
    println!("partial = {}", format_fixed(&r.partial_sum, 6, &mut cc));
    println!("rounded = {}", r.rounded);
}
