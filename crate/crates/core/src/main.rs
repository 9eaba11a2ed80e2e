fn main() {
    std::process::exit(zeta_bound::cli::main_with_env());
}
