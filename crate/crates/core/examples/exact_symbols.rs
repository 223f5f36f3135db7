//! Exact 2j, 3j and 6j symbols, both evaluation paths, and the scalar product
//! between the two coupling bases of four spins.

use std::time::Instant;

use w6j::symbols::{
    dim_zs, scalar_product_ba, six_j_msum, six_j_racah, three_j_symbol, two_j_symbol, JQuad,
    SixJArgs,
};
use w6j::HalfInt;

fn main() -> w6j::Result<()> {
    let h = |s: &str| s.parse::<HalfInt>().unwrap();

    println!("2j (1/2 1/2; 1/2 -1/2) = {}", two_j_symbol(h("1/2"), h("1/2"), h("-1/2"))?);
    println!(
        "3j (1 1 1; 1 0 -1)     = {}",
        three_j_symbol(h("1"), h("1"), h("1"), h("1"), h("0"), h("-1"))?
    );

    for t in [[2, 2, 2, 2, 2, 2], [4, 4, 4, 4, 4, 4], [1, 1, 2, 1, 1, 2], [9, 6, 9, 11, 12, 9]] {
        let args = SixJArgs::from_twice(t);
        let racah = six_j_racah(&args)?;
        let msum = six_j_msum(&args)?;
        assert_eq!(racah, msum);
        println!("{args} = {racah} ≈ {:.12}", racah.to_f64());
    }

    let q = JQuad::from_twice([9, 6, 11, 12]);
    println!("dim of invariant space for {:?} = {}", q.as_array().map(|j| j.to_string()), dim_zs(&q));

    let t0 = Instant::now();
    let mut count = 0usize;
    let max = 8;
    for a in 0..=max {
        for b in 0..=max {
            for c in 0..=max {
                for d in 0..=max {
                    for e in 0..=max {
                        for f in 0..=max {
                            let args = SixJArgs::from_twice([a, b, c, d, e, f]);
                            if !args.is_admissible() {
                                continue;
                            }
                            assert_eq!(six_j_racah(&args)?, six_j_msum(&args)?);
                            count += 1;
                        }
                    }
                }
            }
        }
    }
    println!("racah = m-sum on all {count} admissible symbols with j <= 4 ({:.1?})", t0.elapsed());

    let args = SixJArgs::from_ints([1, 1, 1, 1, 1, 1]);
    println!("<B|A> for {args} = {}", scalar_product_ba(&args)?);
    Ok(())
}
