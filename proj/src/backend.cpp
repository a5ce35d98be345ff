#include "veredit/backend.hpp"

#include <utility>

#include "veredit/gap_buffer.hpp"

namespace veredit {

Line ReferenceBackend::apply(const Command& cmd) {
    EvalResult result = editor_eval(cmd, buffer_);
    buffer_ = std::move(result.buffer);
    return result.output;
}

std::vector<std::string> backend_names() {
    return {"reference", "gap"};
}

std::unique_ptr<BufferBackend> make_backend(std::string_view name, Buffer initial) {
    if (name == "reference")
        return std::make_unique<ReferenceBackend>(std::move(initial));
    if (name == "gap")
        return std::make_unique<GapBufferBackend>(std::move(initial));
    return nullptr;
}

} // namespace veredit
