// Lists the order ideals of P(3,4) and the (3,4)-cores they encode.

use core_partitions::poset::build_poset;
use core_partitions::CoreTuple;

fn main() -> core_partitions::Result<()> {
    let tuple = CoreTuple::new(vec![3, 4])?;
    let poset = build_poset(&tuple)?;
    println!("P{tuple} has elements {:?}", poset.elements());
    for ideal in poset.enumerate_ideals() {
        let lambda = poset.partition_of_ideal(&ideal)?;
        println!("{:?}\t{lambda}\tsize {}", ideal.elements(&poset), lambda.weight());
    }
    Ok(())
}
