fn main() {
    std::process::exit(su3ml::cli::main_with_args(std::env::args_os()));
}
