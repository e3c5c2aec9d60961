use windmill::{verify_power_identities, WindmillParams};

fn main() -> windmill::Result<()> {
    println!(" m  n  M^(2n-1)=mM^(n-1)  M^(n^2-1)=m^(n-1)M^(n-1)  all");
    for m in 1..=4 {
        for n in 3..=6 {
            let r = verify_power_identities(WindmillParams::new(m, n)?)?;
            println!(
                "{m:>2} {n:>2}  {:>18}  {:>24}  {:>3}",
                r.odd_power_scaling,
                r.high_power_scaling,
                if r.all_hold() { "yes" } else { "no" }
            );
        }
    }
    Ok(())
}
