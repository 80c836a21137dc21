fn main() {
    std::process::exit(nakayama_udr::cli::run(std::env::args_os()));
}
