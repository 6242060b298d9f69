// Hook lengths, β-sets and core tests on a single partition.

use core_partitions::{CoreTuple, Partition};

fn main() -> core_partitions::Result<()> {
    let lambda = Partition::new(vec![5, 3, 2, 2, 1])?;
    println!("λ = {lambda}, conjugate {}", lambda.conjugate());
    for row in lambda.hook_lengths() {
        println!("  {row:?}");
    }
    let beta = lambda.beta_set();
    println!("β-set {:?}, rebuilt {}", beta.elements(), Partition::from_beta(&beta));
    for gens in [vec![3, 4], vec![4, 5, 6], vec![7, 8, 9]] {
        let t = CoreTuple::new(gens)?;
        println!("{t}-core: {}", lambda.is_core(&t));
    }
    Ok(())
}
