//! placeholder
pub fn run_cli<I, T>(_args: I) -> i32
where
    I: IntoIterator<Item = T>,
{
    0
}
