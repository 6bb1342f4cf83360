package demo.cloudlab;

import java.util.ArrayList;
import java.util.List;

/* Collects identifier samples for the extraction tests. */
public class TokenSampler {
    private static final int DEFAULT_CAPACITY = 16;
    private final List<String> samples = new ArrayList<>();
    private int sampleCount_ = 0;
    private boolean $dirty = false;

    // Adds one sample and grows the running counter.
    public void addSample(String rawText) {
        samples.add(rawText);
        sampleCount_ = sampleCount_ + 1;
        $dirty = true;
    }

    /* Returns a short status line for logging. */
    public String describe() {
        String prefix = "sampler state: ";
        int used = samples.size();
        if (used > DEFAULT_CAPACITY) {
            return prefix + used;
        }
        return prefix + sampleCount_;
    }
}
