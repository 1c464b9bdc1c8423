fn main() {
    std::process::exit(spd_adagrad::cli::run_cli(std::env::args_os()));
}
